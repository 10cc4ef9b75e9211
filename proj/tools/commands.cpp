#include "commands.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mcgrep/export.hpp"
#include "mcgrep/genus2.hpp"
#include "mcgrep/lawrence_krammer.hpp"
#include "mcgrep/representation.hpp"
#include "mcgrep/sphere.hpp"

namespace mcgrep::cli {

namespace fs = std::filesystem;

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

void write_file(const fs::path& path, const std::string& bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
  f << bytes;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string summary(const RingMatrix& m) {
  std::ostringstream s;
  s << "dim " << m.dim() << ", ";
  if (is_identity(m)) {
    s << "identity";
  } else if (auto c = is_scalar(m)) {
    s << "scalar " << c->to_string();
  } else {
    s << "not scalar (" << m.nonzero_count() << " nonzero entries, at most " << m.max_term_count()
      << " terms per entry)";
  }
  return s.str();
}

std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

struct Check {
  std::string label;
  bool pass;
  std::string detail;
};

}  // namespace

Context make_context(const Options& opt) {
  if (opt.rescaled && opt.group != "braid") {
    throw std::invalid_argument("--rescaled only applies to --group braid");
  }
  if (opt.group == "braid") {
    if (opt.n < 2) throw std::invalid_argument("--group braid needs --n >= 2");
    return Context::braid(opt.n);
  }
  if (opt.group == "sphere") {
    if (opt.n < 4) throw std::invalid_argument("--group sphere needs --n >= 4");
    return Context::sphere(opt.n);
  }
  if (opt.group == "genus2") return Context::genus2();
  if (opt.group == "hyperelliptic") {
    if (opt.g < 2) throw std::invalid_argument("--group hyperelliptic needs --g >= 2");
    return Context::hyperelliptic(opt.g);
  }
  throw std::invalid_argument("unknown group '" + opt.group + "'");
}

std::vector<std::string> input_words(const Options& opt) {
  if (!opt.words.empty() || opt.file.empty()) return opt.words;
  std::ifstream f(opt.file);
  if (!f) throw std::invalid_argument("cannot read " + opt.file);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(f, line)) {
    line = trim(line);
    if (!line.empty() && line[0] == '#') continue;
    out.push_back(line);
  }
  // a file holding only the empty word
  if (out.empty()) out.emplace_back();
  return out;
}

int cmd_eval(const Options& opt, std::ostream& out) {
  const Context ctx = make_context(opt);
  const auto texts = input_words(opt);
  if (texts.size() != 1) throw std::invalid_argument("eval takes exactly one word");
  const Word w = parse_word(texts[0], ctx);
  const auto rep = make_representation(ctx, opt.rescaled);
  const RingMatrix m = rep->evaluate(w);
  if (!opt.out.empty()) write_file(opt.out, export_matrix(m));
  out << rep->name() << ": " << summary(m) << "\n";
  return ok;
}

int cmd_equal(const Options& opt, std::ostream& out) {
  const Context ctx = make_context(opt);
  const auto texts = input_words(opt);
  if (texts.size() != 2) throw std::invalid_argument("equal takes exactly two words");
  const Word w1 = parse_word(texts[0], ctx);
  const Word w2 = parse_word(texts[1], ctx);
  const auto rep = make_representation(ctx, opt.rescaled);
  const bool same = equal_words(w1, w2, *rep);
  out << (same ? "EQUAL" : "DISTINCT") << "\n";
  if (opt.rescaled) {
    out << "note: the rescaled representation has kernel the centre, generated by the full twist;"
           " EQUAL means equal modulo the centre\n";
  }
  return same ? ok : distinct;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Context ctx = make_context(opt);
  const auto rep = make_representation(ctx, opt.rescaled);
  std::vector<Check> checks;

  for (const auto& r : named_relation_suite(ctx)) {
    checks.push_back({r.label, is_identity(rep->evaluate(r.word)), ""});
  }
  const char s = ctx.symbol();
  for (int i = 1; i <= ctx.generator_count(); ++i) {
    checks.push_back({std::string("inverse ") + s + std::to_string(i),
                      is_identity(rep->generator(i) * rep->generator_inverse(i)), ""});
  }
  switch (ctx.kind()) {
    case GroupKind::braid: {
      const RingMatrix m = rep->evaluate(full_twist_word(ctx.parameter()));
      if (opt.rescaled) {
        checks.push_back({"full twist is identity", is_identity(m), summary(m)});
      } else {
        const auto c = is_scalar(m);
        checks.push_back({"full twist is scalar", c && *c == full_twist_scalar(ctx.parameter()),
                          c ? "scalar " + c->to_string() : summary(m)});
      }
      break;
    }
    case GroupKind::sphere:
      checks.push_back({"s1 nontrivial", !is_identity(rep->generator(1)), ""});
      break;
    case GroupKind::genus2:
    case GroupKind::hyperelliptic: {
      const RingMatrix iota = rep->evaluate(involution_word(ctx.parameter()));
      checks.push_back({"involution nontrivial", !is_identity(iota), ""});
      checks.push_back({"involution squares to identity", is_identity(iota * iota), ""});
      break;
    }
  }

  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.label.size());
  bool all = true;
  out << rep->name() << "\n";
  for (const auto& c : checks) {
    out << "  " << std::left << std::setw(static_cast<int>(width)) << c.label << "  "
        << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) out << "  " << c.detail;
    out << "\n";
    all = all && c.pass;
  }
  out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? ok : failed;
}

int cmd_export(const Options& opt, std::ostream& out) {
  const Context ctx = make_context(opt);
  if (opt.out.empty()) throw std::invalid_argument("export needs --out <directory>");
  const fs::path dir(opt.out);
  fs::create_directories(dir);
  const auto rep = make_representation(ctx, opt.rescaled);
  std::size_t files = 0;
  for (int i = 1; i <= ctx.generator_count(); ++i) {
    const std::string stem = "gen_" + std::to_string(i);
    write_file(dir / (stem + ".json"), export_matrix(rep->generator(i)));
    write_file(dir / (stem + "_inv.json"), export_matrix(rep->generator_inverse(i)));
    files += 2;
  }
  if (opt.blocks) {
    const SphereRep* sphere = dynamic_cast<const SphereRep*>(rep.get());
    const auto* hyper = dynamic_cast<const HyperellipticRep*>(rep.get());
    if (hyper) sphere = &hyper->sphere_part();
    if (!sphere) throw std::invalid_argument("--blocks needs a sphere, genus2 or hyperelliptic group");
    for (int i = 1; i <= ctx.generator_count(); ++i) {
      const auto b = block_structure(sphere->generator(i), sphere->block_dim());
      if (!b) throw std::logic_error("generator is not block monomial");
      write_file(dir / ("gen_" + std::to_string(i) + "_blocks.json"), export_block_structure(*b));
      ++files;
      if (hyper) {
        write_file(dir / ("gen_" + std::to_string(i) + "_symplectic.json"),
                   export_integer_matrix(symplectic_generator_integer(hyper->genus(), i)));
        ++files;
      }
    }
  }
  out << "wrote " << files << " files to " << dir.string() << "\n";
  return ok;
}

int cmd_bench(const Options& opt, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const Context ctx = make_context(opt);
  if (opt.trials == 0) throw std::invalid_argument("--trials must be positive");
  const auto rep = make_representation(ctx, opt.rescaled);

  // Letters are drawn straight from the engine output so that the words depend
  // only on the seed, not on the standard library's distributions.
  std::mt19937_64 rng(opt.seed);
  const auto alphabet = static_cast<std::uint64_t>(2 * ctx.generator_count());

  nlohmann::ordered_json report;
  report["context"] = ctx.name();
  report["representation"] = rep->name();
  report["seed"] = opt.seed;
  report["length"] = opt.length;
  report["trials"] = opt.trials;
  auto& results = report["results"] = nlohmann::ordered_json::array();

  out << rep->name() << ", length " << opt.length << ", seed " << opt.seed << "\n";
  double total_ms = 0;
  std::size_t peak = 0;
  for (std::size_t trial = 0; trial < opt.trials; ++trial) {
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < opt.length; ++k) {
      const auto r = rng() % alphabet;
      letters.push_back(Letter{static_cast<int>(r / 2) + 1, r % 2 == 0 ? 1 : -1});
    }
    const Word w(ctx, std::move(letters));
    const auto start = clock::now();
    const RingMatrix m = rep->evaluate(w);
    const double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    total_ms += ms;
    peak = std::max(peak, m.max_term_count());

    nlohmann::ordered_json rec;
    rec["word"] = to_text(w);
    rec["identity"] = is_identity(m);
    rec["nonzero"] = m.nonzero_count();
    rec["max_terms"] = m.max_term_count();
    rec["digest"] = hex64(fnv1a64(export_matrix(m)));
    results.push_back(std::move(rec));

    out << "  trial " << trial + 1 << ": " << std::fixed << std::setprecision(3) << ms
        << " ms, max terms " << m.max_term_count() << "\n";
  }
  report["peak_terms"] = peak;
  out << "total " << std::fixed << std::setprecision(3) << total_ms << " ms, peak terms " << peak
      << "\n";
  if (!opt.out.empty()) write_file(opt.out, report.dump(2) + "\n");
  return ok;
}

}  // namespace mcgrep::cli
