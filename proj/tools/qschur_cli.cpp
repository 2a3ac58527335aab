#include "qschur/coideal.hpp"
#include "qschur/flagconv.hpp"
#include "qschur/suites.hpp"
#include "qschur/typeA.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>

using namespace qschur;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int verbosity = 0;

json laurent_json(const Laurent& x) {
  json j = json::object();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const BigInt& c = it->second;
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
      j[std::to_string(it->first)] = static_cast<long long>(c);
    else
      j[std::to_string(it->first)] = c.str();  // too big for a JSON integer
  }
  return j;
}

json context_json(const Context& c) {
  json j{{"name", c.name()}, {"n", c.n}};
  if (c.finite()) j["d"] = c.d;
  return j;
}

json cell_json(const Cell& A, const Context& c) { return {{"n", A.n()}, {"context", c.name()}, {"rows", A.rows()}}; }

json element_json(const Element& x, const Context& c, const std::string& basis) {
  json terms = json::array();
  for (auto& [A, k] : x) terms.push_back({{"cell", cell_json(A, c)}, {"coeff", laurent_json(k)}, {"text", k.str()}});
  return {{"context", context_json(c)}, {"basis", basis}, {"terms", terms}};
}

// bracket shape for the text form
std::string element_text(const Element& x, const std::string& basis) {
  if (x.is_zero()) return "0";
  if (basis == "canonical") return x.str("{", "}");
  return x.str("[", "]");
}

Context parse_context(const std::string& s) {
  try {
    return Context::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(std::string("--context: ") + e.what());
  }
}

Cell parse_cell(const std::string& s, const Context& c, const char* opt) {
  Cell A;
  try {
    auto j = json::parse(s);
    A = Cell(j.get<std::vector<std::vector<int>>>());
  } catch (const std::exception& e) {
    throw UsageError(std::string(opt) + ": not a JSON row list: " + e.what());
  }
  if (auto why = violation(A, c); !why.empty()) throw UsageError(std::string(opt) + ": " + why + " in " + c.name());
  return A;
}

std::unique_ptr<Algebra> make_algebra(const Context& c, const std::vector<Cell>& cells) {
  switch (c.kind) {
    case Kind::ThetaD: return std::make_unique<TypeA>(c.n, c.d);
    case Kind::ThetaTilde: return std::make_unique<TypeA>(c.n);
    case Kind::XiD: return std::make_unique<JSchur>(c.n, c.d);
    case Kind::XiIotaD: return std::make_unique<JSchur>(c.n, c.d, true);
    case Kind::XiIotaTilde: return std::make_unique<JSchur>(JSchur::limit(c.n, true));
    case Kind::XiTilde: {
      const int m = c.n / 2;
      int even = 0;
      for (auto& A : cells) even += (A(m, m) % 2 == 0);
      if (even && even != static_cast<int>(cells.size()))
        throw UsageError("cells mix even and odd middle entries");
      return std::make_unique<JSchur>(even ? JSchur::limit_even_middle(c.n) : JSchur::limit(c.n));
    }
  }
  throw UsageError("unsupported context");
}

struct Output {
  std::string path;
  std::string format = "text";

  void emit(const json& j, const std::string& text) const {
    const bool as_json = format == "json" || (!path.empty() && fs::path(path).extension() == ".json");
    const std::string body = as_json ? j.dump(1) : text;
    if (path.empty()) {
      std::cout << body << '\n';
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot write " + path);
      out << body << '\n';
    }
  }
};

std::string cache_dir() {
  const char* env = std::getenv("QSCHUR_CACHE");
  return env && *env ? env : "./.cbcache";
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

void log(const std::string& s) {
  if (verbosity > 0) std::cerr << s << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-Schur, jSchur and iSchur algebra calculator"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", verbosity, "more output on stderr");

  std::string ctx_s, left_s, right_s, cell_s, basis = "standard", engine = "formula";
  std::vector<int> primes;
  int pmax = 20;
  Output out;
  auto common = [&](CLI::App* s) {
    s->add_option("-o,--out", out.path, "output file (.json writes JSON)");
    s->add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  };

  auto* mul = app.add_subcommand("mul", "product of two basis elements");
  mul->add_option("--context", ctx_s)->required();
  mul->add_option("--left", left_s)->required();
  mul->add_option("--right", right_s)->required();
  mul->add_option("--basis", basis, "standard or canonical")->check(CLI::IsMember({"standard", "canonical"}));
  mul->add_option("--engine", engine, "formula or flag (finite contexts, standard basis)")
      ->check(CLI::IsMember({"formula", "flag"}));
  mul->add_option("--primes", primes, "primes for the flag engine");
  common(mul);

  auto* bar = app.add_subcommand("bar", "bar involution of [A] in the standard basis");
  bar->add_option("--context", ctx_s)->required();
  bar->add_option("--cell", cell_s)->required();
  common(bar);

  auto* cb = app.add_subcommand("cb", "canonical element {A} in the standard basis");
  cb->add_option("--context", ctx_s)->required();
  cb->add_option("--cell", cell_s)->required();
  common(cb);

  auto* cbs = app.add_subcommand("cbstruct", "{A}{B} in canonical coordinates");
  cbs->add_option("--context", ctx_s)->required();
  cbs->add_option("--left", left_s)->required();
  cbs->add_option("--right", right_s)->required();
  common(cbs);

  auto* tr = app.add_subcommand("transfer", "transfer map out of the given finite context (d -> d - n, d - rank for iSchur)");
  tr->add_option("--context", ctx_s)->required();
  tr->add_option("--cell", cell_s)->required();
  tr->add_option("--basis", basis, "standard: image of [A]; canonical: image of {A} in canonical coordinates")
      ->check(CLI::IsMember({"standard", "canonical"}));
  common(tr);

  int a_max = 10, r_max = 10;
  std::string gamma_out;
  auto* gt = app.add_subcommand("gamma-table", "rank one canonical basis coefficients as CSV");
  gt->add_option("--a-max", a_max)->check(CLI::NonNegativeNumber);
  gt->add_option("--r-max", r_max)->check(CLI::NonNegativeNumber);
  gt->add_option("--out", gamma_out);

  std::vector<std::string> suites;
  std::string report_path;
  bool report_stdout = false;
  auto* ver = app.add_subcommand("verify", "replay the identity suites");
  ver->add_option("suite", suites, "suite ids or all")->required();
  ver->add_option("--report", report_path, "write the JSON report here");
  ver->add_flag("--json", report_stdout, "print the JSON report instead of the text lines");

  auto* stab = app.add_subcommand("stabilize", "class canonical element in a limit context");
  stab->add_option("--context", ctx_s)->required();
  stab->add_option("--cell", cell_s)->required();
  stab->add_option("--shift-budget", pmax, "largest shift tried")->check(CLI::NonNegativeNumber);
  common(stab);

  std::string cache_action;
  unsigned seed = 0;
  auto* cache = app.add_subcommand("cache", "product cache (QSCHUR_CACHE, default ./.cbcache)");
  cache->add_option("action", cache_action, "list, verify or clear")
      ->required()
      ->check(CLI::IsMember({"list", "verify", "clear"}));
  cache->add_option("--seed", seed, "picks the product for verify");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*mul || *cbs) {
      const Context c = parse_context(ctx_s);
      const Cell A = parse_cell(left_s, c, "--left"), B = parse_cell(right_s, c, "--right");
      if (A.co() != B.ro() && !c.type_a()) log("weights do not compose; the product is zero");
      Element r;
      std::string b = *cbs ? "canonical" : basis;
      if (engine == "flag") {
        if (!*mul || basis != "standard" || !c.finite() || c.iota())
          throw UsageError("--engine flag needs schurA or schurJ and the standard basis");
        flag::Oracle o(c.type_a() ? flag::Family::A : flag::Family::BC,
                       primes.empty() ? flag::default_primes() : primes);
        o.set_cache_dir(cache_dir());
        r = o.multiply(A, B);
      } else {
        auto K = make_algebra(c, {A, B});
        r = b == "canonical" ? K->cb_product(A, B) : K->product(A, B);
      }
      json j = element_json(r, c, b);
      if (*cbs) j["positive"] = r.nonneg();
      out.emit(j, element_text(r, b));
    } else if (*bar || *cb) {
      const Context c = parse_context(ctx_s);
      const Cell A = parse_cell(cell_s, c, "--cell");
      auto K = make_algebra(c, {A});
      const Element r = *bar ? K->bar_std(A) : K->canonical(A);
      out.emit(element_json(r, c, "standard"), element_text(r, "standard"));
    } else if (*tr) {
      Context c = parse_context(ctx_s);
      if (!c.finite()) throw UsageError("transfer needs a finite context");
      // the iota cells keep their middle entry
      const int drop = c.iota() ? c.n - 1 : c.n;
      if (c.d < drop) throw UsageError("transfer needs d >= " + std::to_string(drop));
      const Cell A = parse_cell(cell_s, c, "--cell");
      Context dc = c;
      dc.d = c.d - drop;
      Element img;
      json extra = json::object();
      auto run = [&](Algebra& src, Algebra& dst, auto&& hom) {
        if (basis == "standard") {
          img = hom(Element(A));
        } else {
          img = dst.to_canonical(hom(src.canonical(A)));
          extra["positive"] = img.nonneg();
          extra["single"] = img.size() == 1 && img.begin()->second.is_one();
        }
      };
      if (c.type_a()) {
        TypeA src(c.n, c.d), dst(c.n, dc.d);
        TransferA h(src, dst);
        run(src, dst, h);
      } else if (!c.iota()) {
        JSchur src(c.n, c.d), dst(c.n, dc.d);
        TransferJ h(src, dst);
        run(src, dst, h);
      } else {
        if (c.n != 3) throw UsageError("iSchur transfer is available in rank 2 only");
        JSchur src(3, c.d, true), dst(3, dc.d, true);
        Rank1Hom h(src, dst, -2);
        run(src, dst, h);
      }
      json j = element_json(img, dc, basis);
      j["source"] = context_json(c);
      j.update(extra);
      out.emit(j, element_text(img, basis));
    } else if (*gt) {
      std::ostringstream csv;
      csv << "a,i,gamma\n";
      for (int a = 0; a <= a_max; ++a)
        for (int i = 0; i <= r_max; ++i) csv << a << ',' << i << ',' << rank1_gamma(a, i).str() << '\n';
      if (gamma_out.empty()) {
        std::cout << csv.str();
      } else {
        std::ofstream f(gamma_out);
        if (!f) throw std::runtime_error("cannot write " + gamma_out);
        f << csv.str();
      }
    } else if (*ver) {
      std::vector<std::string> ids;
      for (auto& s : suites) {
        if (s == "all") {
          for (auto& d : suite_defs()) ids.push_back(d.id);
          continue;
        }
        bool known = false;
        for (auto& d : suite_defs()) known |= d.id == s;
        if (!known) throw UsageError("unknown suite '" + s + "'");
        ids.push_back(s);
      }
      json rep = json::array();
      bool all_pass = true;
      for (auto& id : ids) {
        const Report r = run_suite(id);
        all_pass &= r.pass();
        rep.push_back({{"suite", r.id}, {"status", r.pass() ? "pass" : "fail"}, {"paper_ref", r.ref}});
        if (report_stdout) continue;
        std::cout << (r.pass() ? "PASS " : "FAIL ") << r.id << " (" << r.ref << "): " << r.checks << " checks, "
                  << r.failed << " failed\n";
        for (auto& f : r.failures) std::cout << "  failed: " << f << '\n';
        for (auto& n : r.notes) std::cout << "  note: " << n << '\n';
        if (verbosity > 0) std::cerr << r.id << ' ' << r.seconds << " s\n";
      }
      if (report_stdout) std::cout << rep.dump(1) << '\n';
      if (!report_path.empty()) {
        std::ofstream f(report_path);
        if (!f) throw std::runtime_error("cannot write " + report_path);
        f << rep.dump(1) << '\n';
      }
      return all_pass ? 0 : 1;
    } else if (*stab) {
      const Context c = parse_context(ctx_s);
      if (c.finite()) throw UsageError("stabilize needs a limit context");
      const Cell A = parse_cell(cell_s, c, "--cell");
      Element el;
      int level = 0;
      if (c.type_a()) {
        TypeA K(c.n);
        auto s = sl_canonical_a(K, A, pmax);
        el = s.element;
        level = s.shift;
      } else if (!c.iota()) {
        auto K = make_algebra(c, {A});
        auto s = sl_canonical_j(static_cast<JSchur&>(*K), A, pmax);
        el = s.element;
        level = s.shift;
      } else {
        if (c.n != 3) throw UsageError("iSchur stabilization is available in rank 2 only");
        JSchur K = JSchur::limit(3, true);
        Rank1Hom down(K, K, -2);
        int p = 0;
        while (A(0, 0) + p < 0) p += 2;
        for (;; p += 2) {
          if (p > pmax) throw NotStabilized("b of " + A.str() + " not stable by shift " + std::to_string(pmax));
          Element low = K.canonical(shift(A, p, Unit::IotaI));
          if (down(K.canonical(shift(A, p + 2, Unit::IotaI))) == low) {
            el = low;
            level = p;
            break;
          }
        }
      }
      json j = element_json(el, c, "standard");
      j["shift"] = level;
      out.emit(j, "shift " + std::to_string(level) + ": " + element_text(el, "standard"));
    } else if (*cache) {
      const std::string dir = cache_dir();
      std::vector<fs::path> files;
      if (fs::is_directory(dir))
        for (auto& e : fs::directory_iterator(dir))
          if (e.path().extension() == ".json") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      if (cache_action == "list") {
        for (auto& f : files) {
          std::ifstream in(f);
          auto j = json::parse(in);
          std::cout << f.filename().string() << ' ' << j.at("family").get<std::string>() << ' '
                    << j.at("A").get<std::string>() << ' ' << j.at("B").get<std::string>() << '\n';
        }
      } else if (cache_action == "clear") {
        for (auto& f : files) fs::remove(f);
        std::cout << "removed " << files.size() << " entries from " << dir << '\n';
      } else {
        if (files.empty()) throw std::runtime_error("cache " + dir + " is empty");
        std::mt19937 rng(seed);
        const auto& f = files[std::uniform_int_distribution<size_t>(0, files.size() - 1)(rng)];
        std::ifstream in(f);
        auto j = json::parse(in);
        const auto fam = j.at("family") == "A" ? flag::Family::A : flag::Family::BC;
        auto ps = j.at("primes").get<std::vector<int>>();
        int q = *std::max_element(ps.begin(), ps.end()) + 1;
        while (!is_prime(q)) ++q;
        const Cell A = Cell::parse(j.at("A")), B = Cell::parse(j.at("B"));
        flag::Oracle o(fam, ps);
        o.set_cache_dir(dir);
        const bool ok = o.recheck(A, B, q);
        std::cout << (ok ? "ok " : "MISMATCH ") << f.filename().string() << ' ' << A.str() << " * " << B.str()
                  << " recounted at q = " << q << '\n';
        return ok ? 0 : 1;
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", "computation"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 1;
  }
  return 0;
}
