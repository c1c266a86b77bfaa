#include "tropenum/curvecount.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace tropenum {

Int CurveFloorPlan::multiplicity() const {
  Int m = 1;
  for (const auto& div : nodal)
    for (const auto& [idx, w] : div.weights) m *= Int(w) * w;
  return m;
}

std::string CurveFloorPlan::serialize() const {
  std::ostringstream out;
  out << "d" << degree << ":n" << delta << ":";
  for (const auto& div : nodal) {
    out << "[D" << div.degree << " k" << div.germs << " w(";
    for (const auto& [idx, w] : div.weights) out << idx << "^" << w << ",";
    out << ") f(";
    for (const auto& t : div.floats)
      out << t.divisor << (t.is_float ? "F" : "P") << t.index << ",";
    out << ")]";
  }
  return out.str();
}

namespace {

// ---------------------------------------------------------------------------
// Floor plan enumeration
// ---------------------------------------------------------------------------

struct DivisorState {
  int degree;
  int germs;         // 0 for non-nodal divisors
  int fixed_points;  // degree - germs
  std::vector<std::pair<int, int>> weights;
  int float_count{0};
};

// One weight configuration choice for a nodal divisor.
struct WeightChoice {
  std::vector<std::pair<int, int>> weights;
  int float_count;
};

// All ways to realize k germs on a divisor of degree i: distribute a weight
// excess over distinct fixed points (weights 2..delta+1, only for interior
// degrees) and let the remaining germs be floats.
std::vector<WeightChoice> weight_choices(int i, int k, int d, int delta) {
  std::vector<WeightChoice> out;
  const int fixed = i - k;
  const bool weights_allowed = (i != 1 && i != d);
  const int max_excess = weights_allowed ? k : 0;
  for (int excess = 0; excess <= max_excess; ++excess) {
    // Assign excess as sum of (w-1) over an increasing choice of fixed
    // points.
    std::vector<std::pair<int, int>> current;
    auto rec = [&](auto&& self, int remaining, int next_index) -> void {
      if (remaining == 0) {
        out.push_back(WeightChoice{current, k - excess});
        return;
      }
      for (int idx = next_index; idx < fixed; ++idx)
        for (int w = 2; w - 1 <= remaining && w <= delta + 1; ++w) {
          current.emplace_back(idx, w);
          self(self, remaining - (w - 1), idx + 1);
          current.pop_back();
        }
    };
    rec(rec, excess, 0);
  }
  return out;
}

struct Enumerator {
  int d, delta;
  std::vector<std::pair<int, int>> tuple;  // (i, k), decreasing i
  std::vector<CurveFloorPlan>* out;

  std::map<int, DivisorState> divisors;  // keyed by degree, nodal only
  std::vector<int> nodal_degrees;        // order matching the tuple

  void run() {
    divisors.clear();
    nodal_degrees.clear();
    for (const auto& [i, k] : tuple) {
      divisors[i] = DivisorState{i, k, i - k, {}, 0};
      nodal_degrees.push_back(i);
    }
    choose_weights(0, 0);
  }

  int fixed_count(int i) const {
    const auto it = divisors.find(i);
    return it == divisors.end() ? i : it->second.fixed_points;
  }

  bool is_weighted(int i, int idx) const {
    const auto it = divisors.find(i);
    if (it == divisors.end()) return false;
    for (const auto& [widx, w] : it->second.weights)
      if (widx == idx) return true;
    return false;
  }

  void choose_weights(std::size_t pos, int weighted_total) {
    if (pos == nodal_degrees.size()) {
      assign_floats();
      return;
    }
    const int i = nodal_degrees[pos];
    auto& st = divisors[i];
    for (auto& choice : weight_choices(i, st.germs, d, delta)) {
      const int new_total = weighted_total + static_cast<int>(choice.weights.size());
      if (new_total > delta) continue;  // total higher-weight points <= delta
      st.weights = choice.weights;
      st.float_count = choice.float_count;
      choose_weights(pos + 1, new_total);
    }
    st.weights.clear();
    st.float_count = 0;
  }

  // -- float assignment ----------------------------------------------------

  struct FloatSlot {
    int divisor;
    int index;  // within its divisor
  };
  std::vector<FloatSlot> slots;
  std::vector<FloatTarget> assignment;

  std::optional<int> float_slot_id(int divisor, int index) const {
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (slots[s].divisor == divisor && slots[s].index == index)
        return static_cast<int>(s);
    return std::nullopt;
  }

  void assign_floats() {
    slots.clear();
    for (const int i : nodal_degrees)
      for (int f = 0; f < divisors[i].float_count; ++f)
        slots.push_back(FloatSlot{i, f});
    assignment.assign(slots.size(), FloatTarget{});
    assign_slot(0);
  }

  std::vector<FloatTarget> candidate_targets(int home) const {
    std::vector<FloatTarget> cands;
    for (const int n : {home - 1, home + 1}) {
      if (n < 1 || n > d) continue;
      for (int idx = 0; idx < fixed_count(n); ++idx)
        if (!is_weighted(n, idx)) cands.push_back(FloatTarget{n, false, idx});
      const auto it = divisors.find(n);
      if (it != divisors.end())
        for (int f = 0; f < it->second.float_count; ++f)
          cands.push_back(FloatTarget{n, true, f});
    }
    return cands;
  }

  void assign_slot(std::size_t s) {
    if (s == slots.size()) {
      if (validate()) emit();
      return;
    }
    const auto& slot = slots[s];
    for (const auto& t : candidate_targets(slot.divisor)) {
      // Same-divisor floats are interchangeable: force strictly increasing
      // targets so each unordered configuration appears once.
      if (slot.index > 0 && !(assignment[s - 1] < t)) continue;
      assignment[s] = t;
      assign_slot(s + 1);
    }
  }

  // Resolve a float's chain; nullopt on a cycle.
  std::optional<FloatTarget> terminal_of(std::size_t s) const {
    std::vector<bool> seen(slots.size(), false);
    std::size_t cur = s;
    while (true) {
      if (seen[cur]) return std::nullopt;
      seen[cur] = true;
      const auto& t = assignment[cur];
      if (!t.is_float) return t;
      cur = static_cast<std::size_t>(*float_slot_id(t.divisor, t.index));
    }
  }

  bool validate() const {
    std::vector<FloatTarget> terminals(slots.size());
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto term = terminal_of(s);
      if (!term) return false;  // cycle
      // A float's chain may not come to rest in its own divisor.
      if (term->divisor == slots[s].divisor) return false;
      terminals[s] = *term;
    }
    // Floats of one divisor need pairwise distinct resting points.
    for (std::size_t s = 0; s < slots.size(); ++s)
      for (std::size_t t = s + 1; t < slots.size(); ++t)
        if (slots[s].divisor == slots[t].divisor &&
            terminals[s] == terminals[t])
          return false;
    return true;
  }

  void emit() {
    CurveFloorPlan plan;
    plan.degree = d;
    plan.delta = delta;
    plan.index_tuple = tuple;
    for (const int i : nodal_degrees) {
      const auto& st = divisors.at(i);
      NodalDivisor nd{st.degree, st.germs, st.fixed_points, st.weights, {}};
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (slots[s].divisor == i) nd.floats.push_back(assignment[s]);
      plan.nodal.push_back(std::move(nd));
    }
    out->push_back(std::move(plan));
  }
};

void enumerate_tuples(int d, int delta,
                      const std::function<void(
                          const std::vector<std::pair<int, int>>&)>& visit) {
  std::vector<std::pair<int, int>> tuple;
  auto rec = [&](auto&& self, int max_i, int remaining) -> void {
    if (remaining == 0) {
      visit(tuple);
      return;
    }
    for (int i = max_i; i >= 1; --i)
      for (int k = std::min(i, remaining); k >= 1; --k) {
        tuple.emplace_back(i, k);
        self(self, i - 1, remaining - k);
        tuple.pop_back();
      }
  };
  rec(rec, d, delta);
}

}  // namespace

std::vector<CurveFloorPlan> enumerate_floor_plans(int d, int delta) {
  if (d < 1 || delta < 0 || 2 * delta > (d - 1) * (d - 2))
    throw std::invalid_argument("need d >= 1 and 0 <= delta <= (d-1)(d-2)/2");
  std::vector<CurveFloorPlan> out;
  if (delta == 0) {
    out.push_back(CurveFloorPlan{d, 0, {}, {}});
    return out;
  }
  enumerate_tuples(d, delta, [&](const std::vector<std::pair<int, int>>& t) {
    Enumerator e{d, delta, t, &out};
    e.run();
  });
  return out;
}

CurveCount count_curves(int d, int delta) {
  CurveCount result{Int(0), {}};
  std::map<std::vector<std::pair<int, int>>, Int> per_tuple;
  std::vector<std::vector<std::pair<int, int>>> order;
  for (const auto& plan : enumerate_floor_plans(d, delta)) {
    const Int m = plan.multiplicity();
    result.total += m;
    if (!per_tuple.count(plan.index_tuple)) order.push_back(plan.index_tuple);
    per_tuple[plan.index_tuple] += m;
  }
  for (const auto& t : order)
    result.breakdown.push_back(TupleCount{t, per_tuple[t]});
  return result;
}

// ---------------------------------------------------------------------------
// Caporaso-Harris oracle
// ---------------------------------------------------------------------------

namespace {

using Seq = std::vector<int>;  // tangency multiplicities, index k-1 |-> count

int weighted_sum(const Seq& s) {
  int total = 0;
  for (std::size_t k = 0; k < s.size(); ++k)
    total += static_cast<int>(k + 1) * s[k];
  return total;
}

int entry_sum(const Seq& s) {
  int total = 0;
  for (const int v : s) total += v;
  return total;
}

Int binom_int(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - j + 1) / j;
  return r;
}

struct CHKey {
  int d, delta;
  Seq alpha, beta;
  bool operator<(const CHKey& o) const {
    return std::tie(d, delta, alpha, beta) <
           std::tie(o.d, o.delta, o.alpha, o.beta);
  }
};

std::map<CHKey, Int> ch_memo;

// All sequences s with given weighted sum bound reachable as alpha' <= alpha
// (entrywise), collected with their remaining data handled by the caller.
void enumerate_below(const Seq& alpha, std::size_t pos, Seq& cur,
                     const std::function<void(const Seq&)>& visit) {
  if (pos == alpha.size()) {
    visit(cur);
    return;
  }
  for (int v = 0; v <= alpha[pos]; ++v) {
    cur[pos] = v;
    enumerate_below(alpha, pos + 1, cur, visit);
  }
  cur[pos] = alpha[pos];
}

// All beta' >= beta (entrywise) whose weighted sum exceeds beta's by
// exactly `budget`.
void enumerate_above(const Seq& beta, int budget, std::size_t pos, Seq& cur,
                     const std::function<void(const Seq&)>& visit) {
  if (pos == beta.size()) {
    if (budget == 0) visit(cur);
    return;
  }
  const int k = static_cast<int>(pos) + 1;
  for (int extra = 0; k * extra <= budget; ++extra) {
    cur[pos] = beta[pos] + extra;
    enumerate_above(beta, budget - k * extra, pos + 1, cur, visit);
  }
  cur[pos] = beta[pos];
}

Int ch_recursive(int d, int delta, Seq alpha, Seq beta) {
  if (delta < 0) return 0;
  if (2 * delta > d * d) return 0;  // generous cap; exact bound not needed
  alpha.resize(d, 0);
  beta.resize(d, 0);
  if (weighted_sum(alpha) + weighted_sum(beta) != d) return 0;
  if (d == 1) return delta == 0 ? Int(1) : Int(0);

  const CHKey key{d, delta, alpha, beta};
  const auto it = ch_memo.find(key);
  if (it != ch_memo.end()) return it->second;

  Int total = 0;
  // Move one non-tangent intersection onto the line: beta_k -> alpha_k.
  for (std::size_t k = 0; k < beta.size(); ++k) {
    if (beta[k] == 0) continue;
    Seq a = alpha, b = beta;
    a[k] += 1;
    b[k] -= 1;
    total += Int(static_cast<int>(k + 1)) * ch_recursive(d, delta, a, b);
  }
  // Degenerate to a degree d-1 curve plus the line.
  Seq ap(alpha.size(), 0), bp(beta.size(), 0);
  enumerate_below(alpha, 0, ap, [&](const Seq& aprime) {
    const int target = (d - 1) - weighted_sum(aprime);
    if (target < 0) return;
    Seq bp_local(beta.size(), 0);
    enumerate_above(beta, target - weighted_sum(beta), 0, bp_local,
                    [&](const Seq& bprime) {
                      const int extra = entry_sum(bprime) - entry_sum(beta);
                      const int dprime = delta + extra - (d - 1);
                      if (dprime < 0) return;
                      Int coeff = 1;
                      for (std::size_t k = 0; k < alpha.size(); ++k)
                        coeff *= binom_int(alpha[k], aprime[k]);
                      for (std::size_t k = 0; k < beta.size(); ++k) {
                        coeff *= binom_int(bprime[k], beta[k]);
                        for (int e = 0; e < bprime[k] - beta[k]; ++e)
                          coeff *= Int(static_cast<int>(k + 1));
                      }
                      if (coeff == 0) return;
                      total += coeff *
                               ch_recursive(d - 1, dprime, aprime, bprime);
                    });
  });
  ch_memo[key] = total;
  return total;
}

}  // namespace

Int caporaso_harris(int d, int delta) {
  if (d < 1 || delta < 0)
    throw std::invalid_argument("caporaso_harris: need d >= 1, delta >= 0");
  Seq alpha(d, 0), beta(d, 0);
  beta[0] = d;
  return ch_recursive(d, delta, alpha, beta);
}

}  // namespace tropenum
