#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace wafomlab::cli {

struct WafomCommand {
  std::string net_file;  // optional when gen_file is given
  std::string gen_file;  // wafom-gen v1; needed for sequential unless S = 1
  std::string method = "all";
  int cap = 26;
  int threads = 0;
};

struct SearchCommand {
  int d = 10;
  int n = 30;
  int s = 4;
  int stage1 = 5000;
  int stage2 = 2000;
  std::uint64_t seed = 1;
  std::string poly;  // a_1..a_d bit string; empty: drawn from the seed
  std::string out;   // output prefix
  int threads = 0;
};

struct Figure1Command {
  int dmin = 8;
  int dmax = 14;
  int n = 30;
  int s = 4;
  int stage1 = 5000;
  int stage2 = 2000;
  std::uint64_t seed = 1;
  std::string out;  // directory
  int threads = 0;
};

struct Figure2Command {
  std::string nets_dir;  // searched nets; empty: baselines only
  std::string integrand = "asian";
  std::vector<std::string> params;  // key=value
  int dmin = 8;                     // used without nets_dir
  int dmax = 14;
  int n = 30;
  int s = 4;
  int reference_log2 = 20;
  std::uint64_t seed = 1;  // recorded in the CSV seed column
  std::string out;         // directory
};

struct SpectrumCommand {
  int n = 3;
  int s = 2;
  std::string integrand = "asian";
  std::vector<std::string> params;
  std::string out;  // file; empty: stdout
};

/// `key=value` pairs to numbers; throws ParseError.
std::map<std::string, double> parse_params(const std::vector<std::string>& pairs);

/// Seed for the search at d inside a figure-1 sweep.
std::uint64_t figure1_seed(std::uint64_t master_seed, int d);

void run_wafom(const WafomCommand& cmd, std::ostream& out, std::ostream& err);
void run_search(const SearchCommand& cmd, std::ostream& out, std::ostream& err);
void run_figure1(const Figure1Command& cmd, std::ostream& out, std::ostream& err);
void run_figure2(const Figure2Command& cmd, std::ostream& out, std::ostream& err);
void run_spectrum(const SpectrumCommand& cmd, std::ostream& out, std::ostream& err);

}  // namespace wafomlab::cli
