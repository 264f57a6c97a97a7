#include "ptol/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "json.hpp"

#include "ptol/errors.hpp"
#include "ptol/io.hpp"
#include "ptol/quotient.hpp"
#include "ptol/refinement.hpp"

namespace ptol {

namespace {

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

struct OpTables {
  std::vector<std::vector<int>> join;  // -1 where the join does not exist
  std::vector<std::vector<int>> meet;
};

OpTables make_tables(const Poset& p) {
  const int n = p.size();
  OpTables t;
  t.join.assign(n, std::vector<int>(n, -1));
  t.meet.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (auto v = p.join(i, j)) t.join[i][j] = *v;
      if (auto v = p.meet(i, j)) t.meet[i][j] = *v;
    }
  }
  return t;
}

// Depth-first search over the unordered element pairs of a reflexive
// symmetric relation.  A pair may be taken IN only while no join/meet product
// of IN pairs lands on a pair already decided OUT, and decided OUT only if no
// product of IN pairs forces it.  Every leaf therefore satisfies the two
// closure conditions outright and only the bound conditions remain to check.
class ToleranceSearch {
 public:
  explicit ToleranceSearch(const Poset& p)
      : p_(p), n_(p.size()), tables_(make_tables(p)) {
    slot_at_.assign(n_, std::vector<int>(n_, -1));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) {
        slot_at_[i][j] = slot_at_[j][i] = static_cast<int>(slots_.size());
        slots_.push_back({i, j});
      }
    }
    state_.assign(slots_.size(), 0);
    for (int i = 0; i < n_; ++i) in_pairs_.push_back({i, i});
  }

  std::vector<Relation> run() {
    found_.clear();
    descend(0);
    return std::move(found_);
  }

 private:
  bool decided_out(int x, int y) const {
    return x != y && state_[slot_at_[x][y]] == 2;
  }

  // Join and meet products of (x1,y1) and (x2,y2) must avoid OUT pairs.
  bool products_allowed(int x1, int y1, int x2, int y2) const {
    const int jx = tables_.join[x1][x2], jy = tables_.join[y1][y2];
    if (jx >= 0 && jy >= 0 && decided_out(jx, jy)) return false;
    const int mx = tables_.meet[x1][x2], my = tables_.meet[y1][y2];
    if (mx >= 0 && my >= 0 && decided_out(mx, my)) return false;
    return true;
  }

  // Products of the new pair with itself land on the new pair or on the
  // diagonal, so checking it against the existing IN pairs is exhaustive.
  bool can_take(int a, int b) const {
    for (const auto& [x, y] : in_pairs_) {
      if (!products_allowed(x, y, a, b)) return false;
      if (!products_allowed(x, y, b, a)) return false;
    }
    return true;
  }

  bool can_drop(int a, int b) const {
    for (const auto& [x1, y1] : in_pairs_) {
      for (const auto& [x2, y2] : in_pairs_) {
        const int jx = tables_.join[x1][x2], jy = tables_.join[y1][y2];
        if (jx >= 0 && jy >= 0 &&
            ((jx == a && jy == b) || (jx == b && jy == a))) {
          return false;
        }
        const int mx = tables_.meet[x1][x2], my = tables_.meet[y1][y2];
        if (mx >= 0 && my >= 0 &&
            ((mx == a && my == b) || (mx == b && my == a))) {
          return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t k) {
    if (k == slots_.size()) {
      emit();
      return;
    }
    const auto [a, b] = slots_[k];
    if (can_take(a, b)) {
      state_[k] = 1;
      in_pairs_.push_back({a, b});
      in_pairs_.push_back({b, a});
      descend(k + 1);
      in_pairs_.pop_back();
      in_pairs_.pop_back();
    }
    state_[k] = 2;
    if (can_drop(a, b)) descend(k + 1);
    state_[k] = 0;
  }

  void emit() {
    Relation r = Relation::diagonal(n_);
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (state_[k] == 1) r.relate(slots_[k].first, slots_[k].second);
    }
    if (check_condition(p_, r, 3) || check_condition(p_, r, 4)) return;
    found_.push_back(std::move(r));
  }

  const Poset& p_;
  int n_;
  OpTables tables_;
  std::vector<std::pair<int, int>> slots_;
  std::vector<std::vector<int>> slot_at_;
  std::vector<char> state_;                     // 0 open, 1 in, 2 out
  std::vector<std::pair<int, int>> in_pairs_;   // ordered, diagonal preloaded
  std::vector<Relation> found_;
};

bool relation_before(const Relation& a, const Relation& b) {
  const int ca = a.matrix().count(), cb = b.matrix().count();
  if (ca != cb) return ca < cb;
  return a.matrix() < b.matrix();
}

ToleranceFamily finish_family(const Poset& p, std::vector<Relation> members) {
  std::sort(members.begin(), members.end(), relation_before);
  const int m = static_cast<int>(members.size());
  BoolMatrix inclusion(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      inclusion.set(i, j, members[i].subset_of(members[j]));
    }
  }
  return ToleranceFamily{p, std::move(members), std::move(inclusion)};
}

}  // namespace

std::vector<Poset> all_posets(int n, int bound) {
  if (n < 1) throw std::invalid_argument("poset size must be at least 1");
  if (n > bound) {
    throw std::invalid_argument("poset enumeration over " + std::to_string(n) +
                                " elements exceeds the bound of " +
                                std::to_string(bound));
  }

  const std::vector<std::string> labels = numeric_labels(n);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  }

  // Every finite poset admits a linear extension, so enumerating the
  // transitively closed upper-triangular relations reaches every isomorphism
  // class; the canonical form removes relabellings.
  std::set<std::string> canonical;
  const std::uint64_t masks = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    BoolMatrix leq(n);
    for (int i = 0; i < n; ++i) leq.set(i, i, true);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask >> k & 1u) leq.set(slots[k].first, slots[k].second, true);
    }
    bool closed = true;
    for (int i = 0; i < n && closed; ++i) {
      for (int j = i + 1; j < n && closed; ++j) {
        if (!leq.get(i, j)) continue;
        for (int k = j + 1; k < n; ++k) {
          if (leq.get(j, k) && !leq.get(i, k)) {
            closed = false;
            break;
          }
        }
      }
    }
    if (!closed) continue;
    canonical.insert(Poset::from_leq(labels, leq).canonical_form(bound));
  }

  std::vector<Poset> out;
  out.reserve(canonical.size());
  for (const std::string& bits : canonical) {
    BoolMatrix leq(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (bits[static_cast<std::size_t>(i) * n + j] == '1') {
          leq.set(i, j, true);
        }
      }
    }
    out.push_back(Poset::from_leq(labels, leq));
  }
  return out;
}

ToleranceFamily all_tolerances(const Poset& p, int bound) {
  if (p.size() > bound) {
    throw std::invalid_argument("tolerance enumeration over " +
                                std::to_string(p.size()) +
                                " elements exceeds the bound of " +
                                std::to_string(bound));
  }
  return finish_family(p, ToleranceSearch(p).run());
}

ToleranceFamily all_congruences(const Poset& p, int bound) {
  if (p.size() > bound) {
    throw std::invalid_argument("congruence enumeration over " +
                                std::to_string(p.size()) +
                                " elements exceeds the bound of " +
                                std::to_string(bound));
  }
  const int n = p.size();
  std::vector<Relation> found;
  std::vector<int> part(n, 0);
  const auto visit = [&]() {
    const int classes = 1 + *std::max_element(part.begin(), part.end());
    std::vector<ElementSet> cliques(classes);
    for (int i = 0; i < n; ++i) cliques[part[i]].push_back(i);
    Relation r = Relation::from_cliques(n, cliques);
    if (is_tolerance(p, r)) found.push_back(std::move(r));
  };
  // Restricted growth: part[0] = 0 and each later entry may open at most one
  // new class, so every set partition appears exactly once.
  const auto descend = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      visit();
      return;
    }
    for (int v = 0; v <= used; ++v) {
      part[i] = v;
      self(self, i + 1, used + (v == used ? 1 : 0));
    }
  };
  descend(descend, 1, 1);
  return finish_family(p, std::move(found));
}

Poset family_poset(const ToleranceFamily& f) {
  const int m = static_cast<int>(f.members.size());
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = "T" + std::to_string(i);
  return Poset::from_leq(std::move(labels), f.inclusion);
}

std::vector<int> minimal_upper_bounds(const ToleranceFamily& f, int a, int b) {
  const int m = static_cast<int>(f.members.size());
  if (a < 0 || a >= m || b < 0 || b >= m) {
    throw std::out_of_range("family member index out of range");
  }
  std::vector<int> upper;
  for (int k = 0; k < m; ++k) {
    if (f.inclusion.get(a, k) && f.inclusion.get(b, k)) upper.push_back(k);
  }
  std::vector<int> minimal;
  for (int k : upper) {
    bool keep = true;
    for (int other : upper) {
      if (other != k && f.inclusion.get(other, k)) {
        keep = false;
        break;
      }
    }
    if (keep) minimal.push_back(k);
  }
  return minimal;
}

// ---------------------------------------------------------------------------
// Verification sweep
// ---------------------------------------------------------------------------

const std::vector<std::string>& all_claims() {
  static const std::vector<std::string> claims = {
      "blocks-are-intervals",
      "blocks-directed-convex",
      "bounded-block-is-interval",
      "congruence-refinement-bijection",
      "interval-squares",
      "lattice-block-operations",
      "quotient-order-axioms",
      "refinement-injection",
      "relcomp-tolerances-transitive",
      "trivial-tolerances",
  };
  return claims;
}

namespace {

struct LocalReport {
  std::map<std::string, ClaimStats> stats;
  std::map<std::string, SweepObservation> observations;
  std::vector<SweepFailure> failures;
};

std::string poset_one_line(const Poset& p) {
  std::ostringstream out;
  out << "elements:";
  for (const std::string& label : p.labels()) out << ' ' << label;
  out << " covers:";
  for (const auto& [a, b] : p.cover_pairs()) {
    out << ' ' << p.label(a) << '<' << p.label(b);
  }
  return out.str();
}

// Replays every active claim against one poset.  Workers hold one sweep each,
// so the object never needs synchronization.
class PosetSweep {
 public:
  PosetSweep(const Poset& p, const std::set<std::string>& active)
      : p_(p), active_(active), canonical_(p.canonical_form()),
        one_line_(poset_one_line(p)), family_(all_tolerances(p)) {}

  LocalReport run() {
    const int m = static_cast<int>(family_.members.size());
    block_lists_.reserve(m);
    for (const Relation& t : family_.members) block_lists_.push_back(blocks(t));
    quotients_.assign(m, std::nullopt);

    if (active("trivial-tolerances")) check_trivial();
    if (active("relcomp-tolerances-transitive") &&
        p_.is_relatively_complemented()) {
      check_relatively_complemented();
    }
    const bool lattice = p_.is_lattice();
    for (int i = 0; i < m; ++i) check_member(i, lattice);
    if (active("refinement-injection") ||
        active("congruence-refinement-bijection")) {
      check_refinements();
    }
    return std::move(report_);
  }

 private:
  bool active(const char* claim) const { return active_.count(claim) != 0; }

  void record(const char* claim, const std::string& relation,
              std::optional<std::string> failure) {
    ClaimStats& st = report_.stats[claim];
    ++st.checked;
    if (!failure) {
      ++st.passed;
      return;
    }
    ++st.failed;
    report_.failures.push_back(
        {claim, canonical_, one_line_, relation, std::move(*failure)});
  }

  const QuotientPoset& quotient(int i) {
    if (!quotients_[i]) {
      quotients_[i] = quotient_poset(p_, family_.members[i]);
    }
    return *quotients_[i];
  }

  void check_trivial() {
    const Relation diagonal = Relation::diagonal(p_.size());
    const Relation full = Relation::full(p_.size());
    std::optional<std::string> failure;
    if (!is_tolerance(p_, diagonal)) {
      failure = "the diagonal relation is not a tolerance";
    } else if (!is_tolerance(p_, full)) {
      failure = "the full relation is not a tolerance";
    } else if (std::find(family_.members.begin(), family_.members.end(),
                         diagonal) == family_.members.end()) {
      failure = "the diagonal relation is missing from the enumerated family";
    } else if (std::find(family_.members.begin(), family_.members.end(),
                         full) == family_.members.end()) {
      failure = "the full relation is missing from the enumerated family";
    }
    record("trivial-tolerances", "-", std::move(failure));
  }

  void check_relatively_complemented() {
    std::optional<std::string> failure;
    for (const Relation& t : family_.members) {
      if (!t.is_transitive()) {
        failure = relation_cliques(p_, t) + " is not transitive";
        break;
      }
    }
    if (!failure) {
      const ToleranceFamily congruences = all_congruences(p_);
      if (congruences.members != family_.members) {
        failure = "tolerance family (" +
                  std::to_string(family_.members.size()) +
                  " members) and congruence family (" +
                  std::to_string(congruences.members.size()) +
                  " members) differ";
      }
    }
    record("relcomp-tolerances-transitive", "-", std::move(failure));
  }

  std::optional<std::string> interval_squares_failure(const Relation& t) const {
    const int n = p_.size();
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (!p_.leq(a, b) || !t.related(a, b)) continue;
        const ElementSet iv = p_.interval(a, b);
        for (int x : iv) {
          for (int y : iv) {
            if (!t.related(x, y)) {
              return "related pair (" + p_.label(a) + "," + p_.label(b) +
                     ") spans interval members (" + p_.label(x) + "," +
                     p_.label(y) + ") that are not related";
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> bounded_block_failure(
      const std::vector<Block>& blks) const {
    for (const Block& b : blks) {
      const auto bottom = p_.bottom_of(b);
      const auto top = p_.top_of(b);
      if (!bottom || !top) continue;
      if (b != p_.interval(*bottom, *top)) {
        return "block " + element_set_label(p_, b) +
               " has bounds but is not the interval [" + p_.label(*bottom) +
               "," + p_.label(*top) + "]";
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> directed_convex_failure(
      const std::vector<Block>& blks) const {
    for (const Block& b : blks) {
      if (!p_.is_directed(b)) {
        return "block " + element_set_label(p_, b) + " is not directed";
      }
      if (!p_.is_convex(b)) {
        return "block " + element_set_label(p_, b) + " is not convex";
      }
    }
    return std::nullopt;
  }

  std::optional<std::string> block_interval_failure(
      const std::vector<Block>& blks) const {
    for (const Block& b : blks) {
      const auto bottom = p_.bottom_of(b);
      const auto top = p_.top_of(b);
      if (!bottom || !top) {
        return "block " + element_set_label(p_, b) +
               " has no least or no greatest member";
      }
      if (b != p_.interval(*bottom, *top)) {
        return "block " + element_set_label(p_, b) +
               " is not the interval [" + p_.label(*bottom) + "," +
               p_.label(*top) + "]";
      }
    }
    return std::nullopt;
  }

  void check_member(int i, bool lattice) {
    const Relation& t = family_.members[i];
    const std::vector<Block>& blks = block_lists_[i];
    const std::string rel = relation_cliques(p_, t);
    const bool trivial = t.is_diagonal() || t.is_full();

    if (active("interval-squares")) {
      record("interval-squares", rel, interval_squares_failure(t));
    }
    if (active("bounded-block-is-interval")) {
      record("bounded-block-is-interval", rel, bounded_block_failure(blks));
    }
    if (!trivial && active("blocks-directed-convex")) {
      record("blocks-directed-convex", rel, directed_convex_failure(blks));
    }
    if (!trivial && active("blocks-are-intervals")) {
      record("blocks-are-intervals", rel, block_interval_failure(blks));
    }
    if (active("quotient-order-axioms")) {
      std::optional<std::string> failure;
      try {
        quotient(i);
      } catch (const FalsifiedGuarantee& e) {
        failure = e.what();
      }
      record("quotient-order-axioms", rel, std::move(failure));
    }
    if (lattice && active("lattice-block-operations")) {
      std::optional<std::string> failure;
      try {
        if (!orders_coincide(p_, t)) {
          failure =
              "block order disagrees with the join/meet order on the blocks";
        }
      } catch (const FalsifiedGuarantee& e) {
        failure = e.what();
      }
      record("lattice-block-operations", rel, std::move(failure));
    }
  }

  void check_refinements() {
    const int m = static_cast<int>(family_.members.size());
    std::vector<std::vector<char>> refine(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        refine[i][j] =
            analyze_refinement(block_lists_[i], block_lists_[j]).refines()
                ? 1
                : 0;
      }
    }

    // Recorded, never asserted: whether the refinement order is transitive.
    SweepObservation& obs = report_.observations["refinement-order-transitive"];
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (!refine[i][j]) continue;
        for (int k = 0; k < m; ++k) {
          if (!refine[j][k]) continue;
          ++obs.checked;
          if (!refine[i][k]) ++obs.violations;
        }
      }
    }

    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (!refine[i][j]) continue;
        const Relation& s = family_.members[i];
        const Relation& t = family_.members[j];
        const std::string rel =
            relation_cliques(p_, s) + " refines " + relation_cliques(p_, t);

        if (active("refinement-injection")) {
          std::optional<std::string> failure;
          try {
            const Relation over = quotient_relation(p_, s, t);
            if (is_tolerance(quotient(i).poset, over)) {
              injection_f(p_, s, t);
            }
          } catch (const FalsifiedGuarantee& e) {
            failure = e.what();
          }
          record("refinement-injection", rel, std::move(failure));
        }
        if (active("congruence-refinement-bijection") && s.is_transitive() &&
            t.is_transitive()) {
          std::optional<std::string> failure;
          try {
            const Relation over = quotient_relation(p_, s, t);
            if (is_tolerance(quotient(i).poset, over)) {
              congruence_bijection_g(p_, s, t);
            }
          } catch (const FalsifiedGuarantee& e) {
            failure = e.what();
          }
          record("congruence-refinement-bijection", rel, std::move(failure));
        }
      }
    }
  }

  const Poset& p_;
  const std::set<std::string>& active_;
  std::string canonical_;
  std::string one_line_;
  ToleranceFamily family_;
  std::vector<std::vector<Block>> block_lists_;
  std::vector<std::optional<QuotientPoset>> quotients_;
  LocalReport report_;
};

}  // namespace

std::int64_t VerificationReport::total_failures() const {
  std::int64_t total = 0;
  for (const auto& [claim, st] : stats) total += st.failed;
  return total;
}

bool VerificationReport::all_passed() const { return total_failures() == 0; }

VerificationReport verify_theorems(int max_n, std::vector<std::string> claims,
                                   int jobs, int witness_cap) {
  if (max_n < 1 || max_n > 6) {
    throw std::invalid_argument("sweep depth must be between 1 and 6");
  }
  if (jobs < 1) throw std::invalid_argument("worker count must be positive");
  if (witness_cap < 0) {
    throw std::invalid_argument("witness cap must not be negative");
  }

  std::vector<std::string> use =
      claims.empty() ? all_claims() : std::move(claims);
  std::sort(use.begin(), use.end());
  use.erase(std::unique(use.begin(), use.end()), use.end());
  const std::vector<std::string>& known = all_claims();
  for (const std::string& c : use) {
    if (std::find(known.begin(), known.end(), c) == known.end()) {
      throw std::invalid_argument("unknown claim '" + c + "'");
    }
  }

  VerificationReport report;
  report.max_n = max_n;
  report.claims = use;
  report.witness_cap = witness_cap;
  for (const std::string& c : use) report.stats[c];
  const std::set<std::string> active(use.begin(), use.end());
  if (active.count("refinement-injection") != 0 ||
      active.count("congruence-refinement-bijection") != 0) {
    report.observations["refinement-order-transitive"];
  }

  for (int n = 1; n <= max_n; ++n) {
    const std::vector<Poset> posets = all_posets(n);
    report.posets_per_n.push_back(static_cast<std::int64_t>(posets.size()));

    // Workers pick posets off a shared counter; results are merged in poset
    // order afterwards, so the report does not depend on the worker count.
    std::vector<LocalReport> results(posets.size());
    const int workers =
        std::min<int>(jobs, static_cast<int>(posets.size()));
    if (workers <= 1) {
      for (std::size_t i = 0; i < posets.size(); ++i) {
        results[i] = PosetSweep(posets[i], active).run();
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t i = next.fetch_add(1); i < posets.size();
                 i = next.fetch_add(1)) {
              results[i] = PosetSweep(posets[i], active).run();
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (std::thread& worker : pool) worker.join();
      for (const std::exception_ptr& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }

    for (LocalReport& local : results) {
      for (const auto& [claim, st] : local.stats) {
        ClaimStats& total = report.stats[claim];
        total.checked += st.checked;
        total.passed += st.passed;
        total.failed += st.failed;
      }
      for (const auto& [name, obs] : local.observations) {
        SweepObservation& total = report.observations[name];
        total.checked += obs.checked;
        total.violations += obs.violations;
      }
      for (SweepFailure& f : local.failures) {
        report.failures.push_back(std::move(f));
      }
    }
  }

  if (static_cast<std::int64_t>(report.failures.size()) > witness_cap) {
    report.failures.resize(witness_cap);
  }
  return report;
}

std::string report_json(const VerificationReport& report) {
  nlohmann::json j;
  j["max-n"] = report.max_n;
  j["witness-cap"] = report.witness_cap;
  j["claims"] = report.claims;
  j["posets-per-size"] = report.posets_per_n;
  nlohmann::json results(nlohmann::json::value_t::object);
  for (const auto& [claim, st] : report.stats) {
    results[claim] = {{"checked", st.checked},
                      {"passed", st.passed},
                      {"failed", st.failed}};
  }
  j["results"] = std::move(results);
  nlohmann::json observations(nlohmann::json::value_t::object);
  for (const auto& [name, obs] : report.observations) {
    observations[name] = {{"checked", obs.checked},
                          {"violations", obs.violations}};
  }
  j["observations"] = std::move(observations);
  nlohmann::json failures = nlohmann::json::array();
  for (const SweepFailure& f : report.failures) {
    failures.push_back({{"claim", f.claim},
                        {"poset-canonical", f.poset_canonical},
                        {"poset", f.poset},
                        {"relation", f.relation},
                        {"detail", f.detail}});
  }
  j["failures"] = std::move(failures);
  j["all-passed"] = report.all_passed();
  return j.dump(2) + "\n";
}

std::string report_summary(const VerificationReport& report) {
  std::ostringstream out;
  std::int64_t total_posets = 0;
  out << "sweep over all posets with 1.." << report.max_n << " elements (";
  for (std::size_t i = 0; i < report.posets_per_n.size(); ++i) {
    if (i != 0) out << " + ";
    out << report.posets_per_n[i];
    total_posets += report.posets_per_n[i];
  }
  out << " = " << total_posets << " posets)\n";

  std::size_t width = 5;
  for (const auto& [claim, st] : report.stats) {
    width = std::max(width, claim.size());
  }
  const int name_width = static_cast<int>(width) + 2;
  out << std::left << std::setw(name_width) << "claim" << std::right
      << std::setw(10) << "checked" << std::setw(10) << "passed"
      << std::setw(10) << "failed" << '\n';
  for (const auto& [claim, st] : report.stats) {
    out << std::left << std::setw(name_width) << claim << std::right
        << std::setw(10) << st.checked << std::setw(10) << st.passed
        << std::setw(10) << st.failed << '\n';
  }
  for (const auto& [name, obs] : report.observations) {
    out << "observed (never asserted): " << name << ": checked "
        << obs.checked << ", violations " << obs.violations << '\n';
  }
  if (!report.failures.empty()) {
    out << "failures (showing " << report.failures.size() << " of "
        << report.total_failures() << "):\n";
    for (const SweepFailure& f : report.failures) {
      out << "  [" << f.claim << "] " << f.poset << " | relation "
          << f.relation << " | " << f.detail << '\n';
    }
  }
  out << "result: " << (report.all_passed() ? "PASS" : "FAIL") << " ("
      << report.total_failures() << " failures)\n";
  return out.str();
}

}  // namespace ptol
