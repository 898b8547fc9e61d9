// Command-line front end: one subcommand per pipeline, tables by default and
// JSON with --json. Exit status 0 on success, 1 on a domain error or a failed
// verification, 2 on a usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "json_io.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/homology.hpp"
#include "polyspace/taxonomy.hpp"

namespace {

using namespace polyspace;
using polyspace::json::Json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string lengths;
  int n = 0;
  bool json = false;
  std::string out;
  int jobs = 0;
};

LengthVector parse_lengths(const std::string& text) {
  if (text.empty()) throw UsageError("--lengths is required");
  try {
    return LengthVector::parse(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string("--lengths: ") + e.what());
  }
}

std::string vec(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s.empty() ? "(none)" : s;
}

std::string family(const std::vector<SubsetMask>& ms) {
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? " " : "") + ms[i].to_string();
  return s.empty() ? "(none)" : s;
}

std::string headline(const ChamberClass& c) {
  switch (c.kind) {
    case ChamberClass::Kind::Empty: return "Empty";
    case ChamberClass::Kind::Disconnected: return "Disconnected";
    case ChamberClass::Kind::Normal: return "Normal";
    case ChamberClass::Kind::Special: return "Special type " + c.type.to_string();
  }
  return "?";
}

void run_classify(const Options& o, std::ostream& os) {
  const LengthVector ell = parse_lengths(o.lengths);
  const ChamberClass c = classify(ell);
  if (o.json) {
    os << Json{{"lengths", json::lengths(ell)}, {"class", c.to_string()}, {"type", c.is_special() ? json::mask(c.type) : Json(nullptr)}}.dump() << '\n';
  } else {
    os << headline(c) << '\n';
  }
}

void run_betti(const Options& o, std::ostream& os) {
  const LengthVector ell = parse_lengths(o.lengths);
  const BettiVector b = betti(ell);
  const std::vector<int> a = a_vector(ell);
  if (o.json) {
    os << Json{{"lengths", json::lengths(ell)}, {"a_vector", a}, {"betti", b}, {"euler_characteristic", euler_characteristic(b)}}.dump() << '\n';
  } else {
    os << "a-vector: " << vec(a) << "\nbetti:    " << vec(b) << "\neuler:    " << euler_characteristic(b) << '\n';
  }
}

void run_signature(const Options& o, std::ostream& os) {
  const LengthVector ell = parse_lengths(o.lengths);
  const CatalogEntry e = make_catalog_entry(chamber_signature(ell));
  if (o.json) {
    os << json::catalog_entry(e).dump() << '\n';
    return;
  }
  std::vector<SubsetMask> shorts = e.signature.shorts;
  std::sort(shorts.begin(), shorts.end(), canonical_less);
  os << "signature:      " << family(shorts) << "\ngenetic code:   " << family(e.code.antichain) << "\nrepresentative: " << e.representative.to_string()
     << '\n';
}

void run_chambers(const Options& o, std::ostream& os) {
  if (o.n == 0) throw UsageError("--n is required");
  const ChamberCatalog catalog = enumerate_chambers(o.n, o.jobs);
  if (o.json) {
    for (const auto& e : catalog.entries) os << json::catalog_entry(e).dump() << '\n';
    return;
  }
  os << catalog.entries.size() << " chambers for n = " << o.n << '\n';
  for (std::size_t i = 0; i < catalog.entries.size(); ++i) {
    const auto& e = catalog.entries[i];
    os << i + 1 << "\t" << e.cls.to_string() << "\tbetti " << vec(e.betti) << "\trep " << e.representative.to_string() << "\tcode "
       << family(e.code.antichain) << '\n';
  }
}

void run_present(const Options& o, std::ostream& os) {
  const LengthVector ell = parse_lengths(o.lengths);
  const ChamberSignature sig = chamber_signature(ell);
  const PresentedCohomology ph = present_h1(sig);
  QuotientRing ring(ph.presentation);
  const std::vector<int> ranks = ring.ranks(sig.n - 3);
  const std::vector<int> torus = torus_image_ranks(ph);
  std::optional<int> deficit;
  if (ph.cls.is_special()) deficit = h1_deficit(sig);
  if (o.json) {
    Json j = json::presented_cohomology(ph);
    j["graded_ranks"] = ranks;
    j["torus_image_ranks"] = torus;
    j["h1_deficit"] = deficit ? Json(*deficit) : Json(nullptr);
    os << j.dump() << '\n';
    return;
  }
  const RingPresentation& p = ph.presentation;
  os << "class:      " << ph.cls.to_string() << "\ngenerators:";
  for (const auto& g : p.generators) os << ' ' << g;
  os << "\nrelations:\n";
  for (const auto& r : p.relations) os << "  " << p.format(r) << '\n';
  os << "torus images:\n";
  for (std::size_t j = 0; j < ph.torus_images.size(); ++j) {
    os << "  X_" << j + 1 << " -> " << (ph.torus_images[j] ? p.format(*ph.torus_images[j]) : std::string("(undetermined)")) << '\n';
  }
  os << "graded ranks:      " << vec(ranks) << "\ntorus image ranks: " << vec(torus) << '\n';
  if (deficit) os << "degree " << ph.deficit_degree << " deficit: " << *deficit << '\n';
}

void run_invariants(const Options& o, std::ostream& os) {
  const LengthVector ell = parse_lengths(o.lengths);
  const ChamberSignature sig = chamber_signature(ell);
  const Fingerprint f = fingerprint(sig);
  Json extra = Json::object();
  std::ostringstream text;
  if (f.class_tag.is_special()) {
    const DInvariants d = d_invariants(sig);
    const BettiCrosscheck c = bettispecial_crosscheck(sig);
    extra["d_invariants"] = {d.d1, d.d2, d.d3};
    extra["closed_form"] = Json{{"case", c.formula_case},
                                {"b1", {c.b1_formula, c.b1_actual}},
                                {"b2", c.b2_formula ? Json{*c.b2_formula, *c.b2_actual} : Json(nullptr)},
                                {"pass", c.pass}};
    text << "d-invariants: " << d.d1 << ' ' << d.d2 << ' ' << d.d3 << "\nclosed form (case " << c.formula_case << "): b1 " << c.b1_formula << " vs "
         << c.b1_actual;
    if (c.b2_formula) text << ", b2 " << *c.b2_formula << " vs " << *c.b2_actual;
    text << (c.pass ? " (pass)" : " (FAIL)") << '\n';
  }
  if (o.json) {
    Json j = json::fingerprint(f);
    for (auto& [key, value] : extra.items()) j[key] = value;
    os << j.dump() << '\n';
    return;
  }
  os << "class:    " << f.class_tag.to_string() << "\nbetti:    " << vec(f.betti) << "\nh1 ranks: " << vec(f.h1_ranks) << '\n';
  for (const auto& [key, rank] : f.ann_table) os << "A^" << key.first << "_" << key.second << ": " << rank << '\n';
  os << text.str();
}

int run_morse(const Options& o, std::ostream& os) {
  const LengthVector ell = parse_lengths(o.lengths);
  const Json j = json::morse_report(ell);
  const bool ok = j["subset_bijection"]["pass"].get<bool>() && j["index_census"]["pass"].get<bool>() && j["euler"]["pass"].get<bool>();
  if (o.json) {
    os << j.dump() << '\n';
    return ok ? 0 : 1;
  }
  os << "critical points:\n";
  for (const auto& q : critical_points(ell)) os << "  J = " << q.j.to_string() << "  index " << q.index << "  t = " << to_string(q.t) << '\n';
  const ReductionStep step = reduction(ell);
  os << "target:    " << step.target.to_string() << "\nepsilon:   " << to_string(step.epsilon) << "\nsubset bijection: " << (j["subset_bijection"]["pass"].get<bool>() ? "pass" : "FAIL")
     << "\nindex census:     " << (j["index_census"]["pass"].get<bool>() ? "pass" : "FAIL") << "\neuler:            " << (j["euler"]["pass"].get<bool>() ? "pass" : "FAIL")
     << '\n';
  return ok ? 0 : 1;
}

int run_walker(const Options& o, std::ostream& os) {
  if (o.n == 0) throw UsageError("--n is required");
  if (o.n < 3 || o.n > 7) throw OutOfRange("walker verification supports 3 <= n <= 7, got " + std::to_string(o.n));
  const ChamberCatalog catalog = enumerate_chambers(o.n, o.jobs);
  const WalkerReport r = verify_walker(catalog);
  if (o.json) {
    os << json::walker_report(r, catalog).dump() << '\n';
    return r.pass() ? 0 : 1;
  }
  os << r.chambers << " chambers, " << r.pairs.size() << " pairs\n";
  for (const auto& [tier, count] : r.tier_counts) os << "tier " << tier << ": " << count << '\n';
  for (const auto& v : r.pairs) {
    if (v.tier < 3) continue;
    os << "  " << catalog.entries[v.first].representative.to_string() << " | " << catalog.entries[v.second].representative.to_string() << "  tier " << v.tier
       << "  " << v.witness << '\n';
  }
  os << (r.pass() ? "pass" : "FAIL") << '\n';
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chambers, Betti numbers and cohomology rings of planar polygon spaces"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--out", o.out, "Write the output to this file");

  auto with_lengths = [&](CLI::App* sub) { sub->add_option("--lengths", o.lengths, "Comma separated bar lengths, e.g. 1,1,2,2,3 or 1/2,1,3/2")->required(); };
  auto* classify_cmd = app.add_subcommand("classify", "Empty, disconnected, normal or special with its type");
  with_lengths(classify_cmd);
  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers and Euler characteristic");
  with_lengths(betti_cmd);
  auto* signature_cmd = app.add_subcommand("signature", "Chamber signature, genetic code and representative");
  with_lengths(signature_cmd);
  auto* present_cmd = app.add_subcommand("present", "Presentation of the subring generated in degree one");
  with_lengths(present_cmd);
  auto* invariants_cmd = app.add_subcommand("invariants", "Ring invariants: fingerprint, annihilator ranks, d-invariants");
  with_lengths(invariants_cmd);
  auto* morse_cmd = app.add_subcommand("morse", "Critical points of the reduction cobordism (ordered lengths)");
  with_lengths(morse_cmd);
  auto* chambers_cmd = app.add_subcommand("chambers", "Enumerate every chamber for n bars");
  chambers_cmd->add_option("--n", o.n, "Number of bars")->required()->check(CLI::Range(3, kMaxEnumerationBars));
  chambers_cmd->add_option("--jobs", o.jobs, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);
  auto* walker_cmd = app.add_subcommand("walker-verify", "Check that ring invariants separate all chambers");
  walker_cmd->add_option("--n", o.n, "Number of bars")->required()->check(CLI::Range(3, 7));
  walker_cmd->add_option("--jobs", o.jobs, "Worker threads, 0 for all cores")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buffer;
  int status = 0;
  try {
    if (*classify_cmd) run_classify(o, buffer);
    else if (*betti_cmd) run_betti(o, buffer);
    else if (*signature_cmd) run_signature(o, buffer);
    else if (*chambers_cmd) run_chambers(o, buffer);
    else if (*present_cmd) run_present(o, buffer);
    else if (*invariants_cmd) run_invariants(o, buffer);
    else if (*morse_cmd) status = run_morse(o, buffer);
    else if (*walker_cmd) status = run_walker(o, buffer);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  if (o.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(o.out);
    if (!file) {
      std::cerr << "usage error: --out: cannot open " << o.out << '\n';
      return 2;
    }
    file << buffer.str();
  }
  return status;
}
