// sesx: suffixient-set compressor built on substring equation systems.
//
// Exit codes: 0 ok, 1 I/O error, 2 bad input / parse error,
// 3 corrupted compressed file, 4 verification mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sesx/bms.hpp"
#include "sesx/compressor.hpp"
#include "sesx/format.hpp"
#include "sesx/oracle.hpp"
#include "sesx/ses.hpp"
#include "sesx/suffix_index.hpp"
#include "sesx/text.hpp"

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) throw IoError("read failed: " + path);
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out.good()) throw IoError("write failed: " + path);
}

// Deterministic alphabet for generated texts: printable bytes when they fit.
unsigned char gen_symbol(int v, int sigma) {
  return sigma <= 94 ? static_cast<unsigned char>(33 + v)
                     : static_cast<unsigned char>(1 + v);
}

int run_compress(const std::string& input, const std::string& output, bool sizes) {
  std::string raw;
  try {
    raw = read_file(input);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  sesx::Compressed comp;
  try {
    comp = sesx::compress(raw);
  } catch (const sesx::SentinelCollision& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const sesx::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::string rendered = sesx::render({comp.sys, comp.raw_len});
  try {
    write_file(output, rendered);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  sesx::Text w = sesx::Text::attach_sentinel(raw);
  std::cerr << "n=" << comp.sys.n << " chi=" << sesx::chi(w)
            << " sigma=" << sesx::Alphabet::of(w).sigma
            << " eq=" << comp.sys.eq.size() << " ch=" << comp.sys.ch.size()
            << " size=" << sesx::size(comp.sys) << "\n";
  if (sizes) {
    std::cerr << "words=" << sesx::size(comp.sys)
              << " bytes=" << rendered.size() << "\n";
  }
  return 0;
}

int run_decompress(const std::string& input, const std::string& output) {
  std::string content;
  try {
    content = read_file(input);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  sesx::SesFile file;
  try {
    file = sesx::parse_ses_file(content);
  } catch (const sesx::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::string raw;
  try {
    raw = sesx::decompress(file.sys, file.raw_len);
  } catch (const sesx::Corrupted& e) {
    std::cerr << "corrupted: " << e.what() << "\n";
    return 3;
  } catch (const sesx::MalformedSystem& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    write_file(output, raw);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int run_stats(const std::string& input) {
  std::string raw;
  try {
    raw = read_file(input);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  sesx::Text w = sesx::Text::attach_sentinel(raw);
  sesx::SuffixIndex idx(w);
  auto records = sesx::compute_sre(idx, w);
  auto trie = sesx::build_reverse_trie(records, w);
  sesx::Ses sys = sesx::emit_ses(trie, w);
  sesx::Pos chi = static_cast<sesx::Pos>(records.size());
  sesx::Pos r = sesx::bwt_run_count(idx, w);
  std::cout << "n\tsigma\tchi\tr\tz_greedy\teq\tch\tsize\tchi_le_2r\n";
  std::cout << w.size() << "\t" << sesx::Alphabet::of(w).sigma << "\t" << chi
            << "\t" << r << "\t" << sesx::greedy_lz_count(w) << "\t"
            << sys.eq.size() << "\t" << sys.ch.size() << "\t" << sesx::size(sys)
            << "\t" << (chi <= 2 * r ? "true" : "false") << "\n";
  return 0;
}

int run_verify(const std::string& original_path, const std::string& ses_path) {
  std::string original, content;
  try {
    original = read_file(original_path);
    content = read_file(ses_path);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  sesx::SesFile file;
  try {
    file = sesx::parse_ses_file(content);
  } catch (const sesx::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (auto diag = sesx::verify_against(original, file)) {
    std::cerr << "mismatch: " << *diag << "\n";
    return 4;
  }
  return 0;
}

int run_gen(const std::string& kind, int k, std::uint64_t seed, long long len,
            int sigma, const std::string& output) {
  std::string data;
  if (kind == "thue-morse") {
    try {
      data = sesx::thue_morse(k);
    } catch (const sesx::OutOfRange& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  } else if (kind == "fibonacci") {
    try {
      data = sesx::fibonacci_word(k);
    } catch (const sesx::OutOfRange& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  } else if (kind == "random") {
    if (len < 0 || sigma < 1 || sigma > 255) {
      std::cerr << "error: random needs --len >= 0 and --sigma in [1,255]\n";
      return 2;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, sigma - 1);
    data.reserve(static_cast<std::size_t>(len));
    for (long long i = 0; i < len; ++i)
      data.push_back(static_cast<char>(gen_symbol(dist(rng), sigma)));
  } else {
    std::cerr << "error: unknown kind " << kind << "\n";
    return 2;
  }
  if (output.empty()) {
    std::fwrite(data.data(), 1, data.size(), stdout);
  } else {
    try {
      write_file(output, data);
    } catch (const IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"suffixient-set compressor (substring equation systems)"};
  app.require_subcommand(1);

  std::string input, output, original, ses_path, kind;
  bool sizes = false;
  int k = 0;
  std::uint64_t seed = 0;
  long long len = 0;
  int sigma = 2;

  auto* c = app.add_subcommand("compress", "compress a file to a SESX1 container");
  c->add_option("--input", input, "input file")->required();
  c->add_option("--output", output, "output file")->required();
  c->add_flag("--sizes", sizes, "also report word count vs file bytes");

  auto* d = app.add_subcommand("decompress", "reconstruct a file from a SESX1 container");
  d->add_option("--input", input, "compressed file")->required();
  d->add_option("--output", output, "output file")->required();

  auto* s = app.add_subcommand("stats", "print one TSV row of repetitiveness measures");
  s->add_option("--input", input, "input file")->required();

  auto* v = app.add_subcommand("verify", "re-check a compressed file against the original");
  v->add_option("original", original, "original file")->required();
  v->add_option("ses", ses_path, "compressed file")->required();

  auto* g = app.add_subcommand("gen", "generate a corpus file");
  g->add_option("kind", kind, "thue-morse | fibonacci | random")->required();
  g->add_option("k", k, "iteration count for thue-morse / fibonacci");
  g->add_option("--seed", seed, "random seed");
  g->add_option("--len", len, "random length");
  g->add_option("--sigma", sigma, "random alphabet size");
  g->add_option("--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(c)) return run_compress(input, output, sizes);
  if (app.got_subcommand(d)) return run_decompress(input, output);
  if (app.got_subcommand(s)) return run_stats(input);
  if (app.got_subcommand(v)) return run_verify(original, ses_path);
  if (app.got_subcommand(g)) return run_gen(kind, k, seed, len, sigma, output);
  return 2;
}
