#include "polyspace/chambers.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>

#include "polyspace/errors.hpp"
#include "polyspace/lp.hpp"

namespace polyspace {

namespace {

void check_masks(int n, const std::vector<SubsetMask>& masks, const char* what) {
  const SubsetMask ground(SubsetMask::full_bits(n - 1));
  for (SubsetMask j : masks) {
    if (!j.subset_of(ground)) {
      throw InvalidAntichain(std::string(what) + " " + j.to_string() + " is not a subset of {1,...," + std::to_string(n - 1) + "}");
    }
  }
}

// Scales a positive rational vector to the primitive integer vector on the
// same ray.
LengthVector primitive(const std::vector<Rational>& x) {
  Integer den = 1;
  for (const auto& q : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(x.size());
  Integer g = 0;
  for (const auto& q : x) {
    ints.push_back(q.get_num() * (den / q.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(Integer(v / g));
  return LengthVector(std::move(out));
}

std::vector<SubsetMask> maximal_elements(const std::vector<SubsetMask>& family) {
  std::vector<SubsetMask> out;
  for (SubsetMask a : family) {
    const bool dominated = std::any_of(family.begin(), family.end(), [&](SubsetMask b) { return b != a && poset_leq(a, b); });
    if (!dominated) out.push_back(a);
  }
  return out;
}

std::vector<SubsetMask> minimal_non_members(const ChamberSignature& closure) {
  std::vector<SubsetMask> missing;
  for (SubsetMask j : poset_elements(closure.n)) {
    if (!closure.contains(j)) missing.push_back(j);
  }
  std::vector<SubsetMask> out;
  for (SubsetMask a : missing) {
    const bool above = std::any_of(missing.begin(), missing.end(), [&](SubsetMask b) { return b != a && poset_leq(b, a); });
    if (!above) out.push_back(a);
  }
  return out;
}

}  // namespace

std::optional<LengthVector> solve_realizability(const RealizabilityProblem& problem) {
  const int n = problem.n;
  if (n < 3 || n > kMaxBars) throw OutOfRange("number of bars " + std::to_string(n) + " outside 3.." + std::to_string(kMaxBars));
  check_masks(n, problem.must_be_short, "short constraint");
  check_masks(n, problem.must_be_long, "long constraint");

  // Variables l_1..l_n, delta; every row is homogeneous except the scale cap.
  const std::size_t vars = static_cast<std::size_t>(n) + 1;
  const std::size_t delta = static_cast<std::size_t>(n);
  lp::Problem lp;
  auto add_row = [&](std::vector<Rational> row, Rational rhs) {
    lp.a.push_back(std::move(row));
    lp.b.push_back(std::move(rhs));
  };
  auto membership_row = [&](SubsetMask j, int sign) {
    // sign * (sum_{J u n} - sum_rest) + delta <= 0
    std::vector<Rational> row(vars);
    const SubsetMask with_n = j.with(n);
    for (int i = 1; i <= n; ++i) row[static_cast<std::size_t>(i - 1)] = with_n.contains(i) ? sign : -sign;
    row[delta] = 1;
    add_row(std::move(row), 0);
  };
  for (SubsetMask j : problem.must_be_short) membership_row(j, 1);
  for (SubsetMask j : problem.must_be_long) membership_row(j, -1);
  for (int i = 1; i < n; ++i) {
    std::vector<Rational> row(vars);
    row[static_cast<std::size_t>(i - 1)] = 1;
    row[static_cast<std::size_t>(i)] = -1;
    add_row(std::move(row), 0);
  }
  {
    std::vector<Rational> row(vars);
    row[delta] = 1;
    row[0] = -1;
    add_row(std::move(row), 0);
  }
  {
    std::vector<Rational> row(vars, Rational(1));
    row[delta] = 0;
    add_row(std::move(row), 1);
  }
  lp.c.assign(vars, Rational(0));
  lp.c[delta] = 1;

  const auto sol = lp::maximize(lp);
  if (!sol || sgn(sol->objective) <= 0) return std::nullopt;
  return primitive(std::vector<Rational>(sol->x.begin(), sol->x.begin() + n));
}

std::optional<LengthVector> realizable(int n, const GeneticCode& code) {
  if (n < 3 || n > kMaxBars) throw OutOfRange("number of bars " + std::to_string(n) + " outside 3.." + std::to_string(kMaxBars));
  check_masks(n, code.antichain, "code member");
  for (SubsetMask j : code.antichain) {
    if (j.size() > n - 3) throw InvalidAntichain("code member " + j.to_string() + " has more than n-3 elements");
  }
  if (!is_antichain(code.antichain)) throw InvalidAntichain("code members are not pairwise incomparable");
  GeneticCode normalized{n, code.antichain};
  std::sort(normalized.antichain.begin(), normalized.antichain.end(), canonical_less);
  const ChamberSignature closure = down_closure(normalized);
  return solve_realizability({n, normalized.antichain, minimal_non_members(closure)});
}

LengthVector representative(const ChamberSignature& sig) {
  const GeneticCode code = genetic_code(sig);
  if (down_closure(code) != sig) throw Unrealizable("family is not a down-closed set of subsets with at most n-3 elements");
  auto witness = realizable(sig.n, code);
  if (!witness) throw Unrealizable("no generic length vector realizes the family");
  return *witness;
}

CatalogEntry make_catalog_entry(const ChamberSignature& sig) {
  return {genetic_code(sig), sig, representative(sig), betti(sig), classify(sig)};
}

namespace {

// Depth-first walk over the poset elements in a linear extension. Each node
// decides one element; out-ness propagates upwards, and the inherited witness
// settles one branch without solving an LP.
class ChamberSearch {
 public:
  struct Node {
    std::size_t pos = 0;
    std::vector<SubsetMask> ins;
    std::vector<SubsetMask> outs;  // the minimal non-members decided so far
    std::shared_ptr<const LengthVector> witness;
  };

  explicit ChamberSearch(int n) : n_(n), elements_(poset_elements(n)) {}

  std::size_t size() const { return elements_.size(); }

  std::vector<Node> expand(const Node& node) const {
    std::vector<Node> children;
    const SubsetMask e = elements_[node.pos];
    const bool forced_out = std::any_of(node.outs.begin(), node.outs.end(), [&](SubsetMask f) { return poset_leq(f, e); });
    if (forced_out) {
      Node child = node;
      ++child.pos;
      children.push_back(std::move(child));
      return children;
    }
    const int witness_sign = node.witness ? node.witness->balance_sign(e.with(n_)) : 0;
    for (const bool in : {true, false}) {
      Node child = node;
      ++child.pos;
      (in ? child.ins : child.outs).push_back(e);
      const bool witnessed = witness_sign != 0 && ((witness_sign < 0) == in);
      if (!witnessed) {
        auto found = solve_realizability({n_, maximal_elements(child.ins), child.outs});
        if (!found) continue;
        child.witness = std::make_shared<const LengthVector>(std::move(*found));
      }
      children.push_back(std::move(child));
    }
    return children;
  }

  void walk(const Node& node, std::vector<ChamberSignature>& found) const {
    if (node.pos == elements_.size()) {
      ChamberSignature sig{n_, node.ins};
      std::sort(sig.shorts.begin(), sig.shorts.end(), canonical_less);
      found.push_back(std::move(sig));
      return;
    }
    for (const Node& child : expand(node)) walk(child, found);
  }

 private:
  int n_;
  std::vector<SubsetMask> elements_;
};

}  // namespace

ChamberCatalog enumerate_chambers(int n, int jobs) {
  if (n < 3 || n > kMaxEnumerationBars) {
    throw OutOfRange("chamber enumeration supports 3 <= n <= " + std::to_string(kMaxEnumerationBars) + ", got " + std::to_string(n));
  }
  if (jobs <= 0) jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  const ChamberSearch search(n);
  // Split the top of the tree into independent subtrees for the workers.
  std::vector<ChamberSearch::Node> frontier{ChamberSearch::Node{}};
  const std::size_t wanted = jobs == 1 ? 1 : static_cast<std::size_t>(jobs) * 8;
  while (frontier.size() < wanted && frontier.front().pos < search.size()) {
    std::vector<ChamberSearch::Node> next;
    for (const auto& node : frontier) {
      for (auto& child : search.expand(node)) next.push_back(std::move(child));
    }
    frontier = std::move(next);
  }

  std::vector<std::vector<CatalogEntry>> results(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t t = cursor++; t < frontier.size(); t = cursor++) {
      std::vector<ChamberSignature> sigs;
      search.walk(frontier[t], sigs);
      for (const auto& sig : sigs) results[t].push_back(make_catalog_entry(sig));
    }
  };
  const int threads = std::min<int>(jobs, static_cast<int>(frontier.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  ChamberCatalog catalog{n, {}};
  for (auto& part : results) {
    for (auto& entry : part) catalog.entries.push_back(std::move(entry));
  }
  std::sort(catalog.entries.begin(), catalog.entries.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return signature_less(a.signature, b.signature); });
  return catalog;
}

}  // namespace polyspace
