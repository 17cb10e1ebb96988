#include "rotor/syndrome_search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace rotor {

bool lex_less(const SmallVec& a, const SmallVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

struct Plan {
  std::size_t n = 0, r = 0;
  SearchMode mode = SearchMode::Integer;
  std::int64_t mod = 0;
  std::vector<std::size_t> column;  // position -> original column
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> entries;  // per position
  std::vector<std::vector<std::size_t>> closing;  // rows whose last column is at this position
  std::vector<std::size_t> max_nnz_from;
  std::vector<std::int64_t> max_abs_sum_from;
  std::size_t positions() const { return column.size(); }
};

std::int64_t to_i64(const Int& x) {
  if (!x.fits_slong_p()) throw std::overflow_error("check entry too large for the search engine");
  return x.get_si();
}

Plan make_plan(const SearchProblem& p) {
  Plan plan;
  plan.n = p.checks.cols();
  plan.r = p.checks.rows();
  plan.mode = p.mode;
  plan.mod = p.modulus;
  if (p.mode == SearchMode::ModL && p.modulus < 2) throw std::invalid_argument("modulus must be at least 2");

  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> col_entries(plan.n);
  for (std::size_t i = 0; i < plan.r; ++i)
    for (std::size_t j = 0; j < plan.n; ++j) {
      std::int64_t c = to_i64(p.checks(i, j));
      if (p.mode == SearchMode::ModL) c = ((c % plan.mod) + plan.mod) % plan.mod;
      if (c != 0) col_entries[j].push_back({i, c});
    }
  std::vector<std::size_t> candidates;
  for (std::size_t j = 0; j < plan.n; ++j)
    if (p.allowed.empty() || p.allowed[j]) candidates.push_back(j);

  // Greedy order keeping the number of open rows small.
  std::vector<std::size_t> remaining(plan.r, 0);
  for (std::size_t j : candidates)
    for (auto [i, c] : col_entries[j]) ++remaining[i];
  std::vector<bool> touched(plan.r, false), placed(plan.n, false);
  long open = 0;
  for (std::size_t step = 0; step < candidates.size(); ++step) {
    std::size_t best = 0;
    long best_score = 0;
    bool have = false;
    for (std::size_t j : candidates) {
      if (placed[j]) continue;
      long fresh = 0, closed = 0;
      for (auto [i, c] : col_entries[j]) {
        if (!touched[i]) ++fresh;
        if (remaining[i] == 1) ++closed;
      }
      long score = open + fresh - closed;
      if (!have || score < best_score) {
        have = true;
        best = j;
        best_score = score;
      }
    }
    placed[best] = true;
    for (auto [i, c] : col_entries[best]) {
      if (!touched[i]) {
        touched[i] = true;
        ++open;
      }
      if (--remaining[i] == 0) --open;
    }
    plan.column.push_back(best);
  }

  const std::size_t P = plan.column.size();
  plan.entries.resize(P);
  plan.closing.assign(P, {});
  std::vector<long> last(plan.r, -1);
  for (std::size_t q = 0; q < P; ++q) {
    plan.entries[q] = col_entries[plan.column[q]];
    for (auto [i, c] : plan.entries[q]) last[i] = static_cast<long>(q);
  }
  for (std::size_t i = 0; i < plan.r; ++i)
    if (last[i] >= 0) plan.closing[static_cast<std::size_t>(last[i])].push_back(i);
  plan.max_nnz_from.assign(P + 1, 0);
  plan.max_abs_sum_from.assign(P + 1, 0);
  for (std::size_t q = P; q-- > 0;) {
    std::int64_t abs_sum = 0;
    for (auto [i, c] : plan.entries[q]) abs_sum += c < 0 ? -c : c;
    plan.max_nnz_from[q] = std::max(plan.max_nnz_from[q + 1], plan.entries[q].size());
    plan.max_abs_sum_from[q] = std::max(plan.max_abs_sum_from[q + 1], abs_sum);
  }
  return plan;
}

struct Worker {
  const Plan& plan;
  const SearchProblem& problem;
  std::atomic<std::uint64_t>& global_nodes;
  const std::function<bool(const SmallVec&)>* visit = nullptr;

  SmallVec syn, val;
  std::size_t nz = 0;
  std::int64_t sum_abs = 0;
  ShellResult res;
  bool stop = false;

  Worker(const Plan& pl, const SearchProblem& pr, std::atomic<std::uint64_t>& g)
      : plan(pl), problem(pr), global_nodes(g), syn(pl.r, 0), val(pl.positions(), 0) {}

  void apply(std::size_t q, std::int64_t x) {
    for (auto [i, c] : plan.entries[q]) {
      std::int64_t old = syn[i];
      std::int64_t nw = old + x * c;
      if (plan.mode == SearchMode::ModL) nw = ((nw % plan.mod) + plan.mod) % plan.mod;
      if (old != 0) --nz;
      if (nw != 0) ++nz;
      sum_abs += (nw < 0 ? -nw : nw) - (old < 0 ? -old : old);
      syn[i] = nw;
    }
  }

  bool closing_ok(std::size_t q) const {
    for (std::size_t i : plan.closing[q])
      if (syn[i] != 0) return false;
    return true;
  }

  std::int64_t cost(std::int64_t x) const {
    if (plan.mode == SearchMode::Integer) return x < 0 ? -x : x;
    return 1;
  }

  void hit() {
    SmallVec v(plan.n, 0);
    for (std::size_t q = 0; q < plan.positions(); ++q) v[plan.column[q]] = val[q];
    const bool signed_mode = plan.mode != SearchMode::ModL;
    SmallVec neg = v;
    for (auto& x : neg) x = -x;
    bool take_v = !problem.accept || problem.accept(v);
    bool take_neg = false;
    if (signed_mode) take_neg = problem.symmetric_accept ? take_v : (!problem.accept || problem.accept(neg));
    if (take_v) record(v);
    if (take_neg && !stop) record(neg);
  }

  void record(const SmallVec& cand) {
    if (visit && !(*visit)(cand)) stop = true;
    ++res.hits;
    if (!res.found || lex_less(cand, res.witness)) {
      res.found = true;
      res.witness = cand;
    }
  }

  void dfs(std::size_t q, std::int64_t budget) {
    if (stop) return;
    ++res.nodes;
    if (problem.max_nodes && (res.nodes & 1023) == 0) {
      if (global_nodes.fetch_add(1024) > problem.max_nodes) {
        res.exhausted = false;
        stop = true;
        return;
      }
    }
    if (budget == 0) {
      if (nz == 0) hit();
      return;
    }
    const std::size_t P = plan.positions();
    if (q == P) return;
    if (nz > 0) {
      const std::size_t per = plan.max_nnz_from[q];
      if (per == 0) return;
      if (static_cast<std::int64_t>((nz + per - 1) / per) > budget) return;
      if (plan.mode == SearchMode::Integer && sum_abs > budget * plan.max_abs_sum_from[q]) return;
    }
    if (closing_ok(q)) dfs(q + 1, budget);
    for_each_value(budget, [&](std::int64_t x) {
      apply(q, x);
      val[q] = x;
      if (closing_ok(q)) dfs(q + 1, budget - cost(x));
      val[q] = 0;
      apply(q, -x);
    });
  }

  template <class F>
  void for_each_value(std::int64_t budget, F&& f) {
    switch (plan.mode) {
      case SearchMode::Ternary:
        f(1);
        f(-1);
        break;
      case SearchMode::Integer:
        for (std::int64_t a = 1; a <= budget; ++a) {
          f(a);
          f(-a);
        }
        break;
      case SearchMode::ModL:
        for (std::int64_t a = 1; a < plan.mod; ++a) f(a);
        break;
    }
  }

  // The first nonzero entry sits at position q0 with a canonical value; in
  // signed modes only positive leading values are enumerated.
  void run_task(std::size_t q0, std::int64_t x0, std::int64_t weight) {
    apply(q0, x0);
    val[q0] = x0;
    if (closing_ok(q0)) dfs(q0 + 1, weight - cost(x0));
    val[q0] = 0;
    apply(q0, -x0);
  }
};

std::vector<std::pair<std::size_t, std::int64_t>> make_tasks(const Plan& plan, long weight) {
  std::vector<std::pair<std::size_t, std::int64_t>> tasks;
  for (std::size_t q = 0; q < plan.positions(); ++q) {
    switch (plan.mode) {
      case SearchMode::Ternary: tasks.push_back({q, 1}); break;
      case SearchMode::Integer:
        for (std::int64_t a = 1; a <= weight; ++a) tasks.push_back({q, a});
        break;
      case SearchMode::ModL:
        for (std::int64_t a = 1; a < plan.mod; ++a) tasks.push_back({q, a});
        break;
    }
  }
  return tasks;
}

void merge(ShellResult& into, const ShellResult& from) {
  into.hits += from.hits;
  into.nodes += from.nodes;
  into.exhausted = into.exhausted && from.exhausted;
  if (from.found && (!into.found || lex_less(from.witness, into.witness))) {
    into.found = true;
    into.witness = from.witness;
  }
}

ShellResult run_shell(const Plan& plan, const SearchProblem& p, long weight) {
  ShellResult total;
  if (weight <= 0) return total;
  auto tasks = make_tasks(plan, weight);
  std::vector<ShellResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> nodes{0};
  auto work = [&]() {
    for (;;) {
      std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      Worker w(plan, p, nodes);
      w.run_task(tasks[t].first, tasks[t].second, weight);
      results[t] = w.res;
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(p.jobs, static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  for (const auto& r : results) merge(total, r);
  return total;
}

}  // namespace

ShellResult search_shell(const SearchProblem& p, long weight) {
  Plan plan = make_plan(p);
  return run_shell(plan, p, weight);
}

MinimumResult search_minimum(const SearchProblem& p, long max_weight) {
  Plan plan = make_plan(p);
  MinimumResult out;
  for (long w = 1; w <= max_weight; ++w) {
    ShellResult s = run_shell(plan, p, w);
    out.nodes += s.nodes;
    if (!s.exhausted) {
      out.exhausted = false;
      return out;
    }
    if (s.found) {
      out.weight = w;
      out.witness = s.witness;
      return out;
    }
  }
  return out;
}

void enumerate_shell(const SearchProblem& p, long weight, const std::function<bool(const SmallVec&)>& visit) {
  if (weight <= 0) return;
  Plan plan = make_plan(p);
  std::atomic<std::uint64_t> nodes{0};
  for (auto [q0, x0] : make_tasks(plan, weight)) {
    Worker w(plan, p, nodes);
    w.visit = &visit;
    w.run_task(q0, x0, weight);
    if (w.stop) return;
  }
}

}  // namespace rotor
