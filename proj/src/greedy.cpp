#include "paircover/greedy.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

namespace paircover {
namespace {

// Construction-phase state: per-(customer, facility) counts of chosen
// partners, and per-facility gains (number of uncovered customers the
// facility would newly cover).
class Builder {
 public:
  Builder(const ScpInstance& inst, SplitMix64* rng)
      : inst_(inst),
        rng_(rng),
        chosen_(inst.num_facilities, 0),
        covered_(inst.num_customers, 0),
        gain_(inst.num_facilities, 0),
        paired_(static_cast<std::size_t>(inst.num_customers) *
                    inst.num_facilities,
                0),
        stamp_(inst.num_facilities, 0) {
    uncovered_ = inst_.num_customers;
    for (int u = 0; u < inst_.num_customers; ++u) {
      int s = inst_.self_facility[u];
      if (s >= 0) gain_[s]++;
    }
  }

  void start_best_pair() {
    // Scan the pairs that appear in T (grouped runs of the by_s1 copy).
    long best = 0;
    int best_s1 = -1, best_s2 = -1;
    std::uint64_t seen = 0;
    const auto& v = inst_.by_s1;
    for (std::size_t i = 0; i < v.size();) {
      std::size_t j = i;
      while (j < v.size() && v[j].s1 == v[i].s1 && v[j].s2 == v[i].s2) ++j;
      accesses_ += j - i;
      long value = static_cast<long>(j - i);
      int uc = inst_.facility_customer[v[i].s1];
      if (uc >= 0) value++;
      uc = inst_.facility_customer[v[i].s2];
      if (uc >= 0) value++;
      if (value > best) {
        best = value;
        best_s1 = v[i].s1;
        best_s2 = v[i].s2;
        seen = 1;
      } else if (value == best && best > 0) {
        // Reservoir over the tied set.
        ++seen;
        if (rng_ && rng_->next_below(seen) == 0) {
          best_s1 = v[i].s1;
          best_s2 = v[i].s2;
        }
      }
      i = j;
    }
    if (best_s1 >= 0) {
      add(best_s1);
      add(best_s2);
    }
  }

  void start_random_customer() {
    if (inst_.num_customers == 0) return;
    int u = static_cast<int>(rng_->next_below(inst_.num_customers));
    int s = inst_.self_facility[u];
    if (s >= 0) add(s);
  }

  void add(int s) {
    if (chosen_[s]) return;
    chosen_[s] = 1;
    add_order_.push_back(s);
    newly_covered_.clear();
    int uc = inst_.facility_customer[s];
    if (uc >= 0 && !covered_[uc]) newly_covered_.push_back(uc);
    auto scan = [&](const std::vector<ScpTriple>& v, std::size_t lo,
                    std::size_t hi, bool other_is_s2) {
      for (std::size_t i = lo; i < hi; ++i) {
        ++accesses_;
        int u = v[i].u;
        if (covered_[u]) continue;
        int other = other_is_s2 ? v[i].s2 : v[i].s1;
        int& pc = paired_[idx(u, other)];
        if (pc++ == 0 && !chosen_[other]) gain_[other]++;
        if (chosen_[other]) newly_covered_.push_back(u);
      }
    };
    scan(inst_.by_s1, inst_.s1_start[s], inst_.s1_start[s + 1], true);
    scan(inst_.by_s2, inst_.s2_start[s], inst_.s2_start[s + 1], false);
    for (int u : newly_covered_)
      if (!covered_[u]) cover_customer(u);
  }

  // Largest-gain unchosen facility, ties uniform over the argmax set.
  int pick_best() {
    int best = -1;
    int best_gain = 0;
    std::uint64_t seen = 0;
    for (int s = 0; s < inst_.num_facilities; ++s) {
      if (chosen_[s] || gain_[s] <= 0) continue;
      if (gain_[s] > best_gain) {
        best_gain = gain_[s];
        best = s;
        seen = 1;
      } else if (gain_[s] == best_gain) {
        ++seen;
        if (rng_ && rng_->next_below(seen) == 0) best = s;
      }
    }
    return best;
  }

  GreedyResult finish() {
    while (uncovered_ > 0) {
      int s = pick_best();
      if (s < 0) {
        int u = 0;
        while (u < inst_.num_customers && covered_[u]) ++u;
        throw InfeasibleError(
            "instance infeasible: customer " + std::to_string(u) +
                " cannot be covered",
            u);
      }
      add(s);
    }
    GreedyResult res;
    res.add_order = add_order_;
    res.cover = add_order_;
    std::sort(res.cover.begin(), res.cover.end());
    res.triple_accesses = accesses_;
    return res;
  }

  std::size_t accesses() const { return accesses_; }

 private:
  std::size_t idx(int u, int s) const {
    return static_cast<std::size_t>(u) * inst_.num_facilities + s;
  }

  void cover_customer(int u) {
    covered_[u] = 1;
    --uncovered_;
    ++epoch_;
    auto drop_gain = [&](int s) {
      if (!chosen_[s] && stamp_[s] != epoch_) {
        stamp_[s] = epoch_;
        if (paired_[idx(u, s)] > 0) gain_[s]--;
      }
    };
    for (std::size_t i = inst_.u_start[u]; i < inst_.u_start[u + 1]; ++i) {
      ++accesses_;
      drop_gain(inst_.by_u[i].s1);
      drop_gain(inst_.by_u[i].s2);
    }
    int self = inst_.self_facility[u];
    if (self >= 0 && !chosen_[self]) gain_[self]--;
  }

  const ScpInstance& inst_;
  SplitMix64* rng_;
  std::vector<std::uint8_t> chosen_;
  std::vector<std::uint8_t> covered_;
  std::vector<int> gain_;
  std::vector<int> paired_;
  std::vector<int> stamp_;
  int epoch_ = 0;
  int uncovered_ = 0;
  std::vector<int> add_order_;
  std::vector<int> newly_covered_;
  std::size_t accesses_ = 0;
};

// Minimalization state: mycount/covercount plus per-customer linked lists of
// facilities bucketed by covercount value; the list at (u, mycount(u)) holds
// exactly the facilities every valid pair for u goes through.
class Minimalizer {
 public:
  Minimalizer(const ScpInstance& inst, const std::vector<int>& cover,
              std::size_t* accesses)
      : inst_(inst),
        accesses_(accesses),
        chosen_(inst.num_facilities, 0),
        mycount_(inst.num_customers, 0),
        cc_(static_cast<std::size_t>(inst.num_customers) *
                inst.num_facilities,
            0),
        head_(static_cast<std::size_t>(inst.num_customers) *
                  (inst.num_facilities + 1),
              -1),
        node_next_(cc_.size(), -1),
        node_prev_(cc_.size(), -1),
        required_(inst.num_facilities, 0),
        affected_stamp_(inst.num_customers, 0) {
    for (int s : cover) chosen_[s] = 1;
    for (const ScpTriple& t : inst_.by_u) {
      bump();
      if (chosen_[t.s1] && chosen_[t.s2]) {
        mycount_[t.u]++;
        cc_[node(t.u, t.s1)]++;
        cc_[node(t.u, t.s2)]++;
      }
    }
    for (int u = 0; u < inst_.num_customers; ++u)
      for (int s : cover)
        if (cc_[node(u, s)] > 0) link(u, s, cc_[node(u, s)]);
    for (int u = 0; u < inst_.num_customers; ++u) mark_required(u);
  }

  bool removable(int s) const { return chosen_[s] && !required_[s]; }

  void remove(int s) {
    chosen_[s] = 0;
    ++affected_epoch_;
    auto touch = [&](int u) {
      if (affected_stamp_[u] != affected_epoch_) {
        affected_stamp_[u] = affected_epoch_;
        affected_.push_back(u);
      }
    };
    affected_.clear();
    auto scan = [&](const std::vector<ScpTriple>& v, std::size_t lo,
                    std::size_t hi, bool other_is_s2) {
      for (std::size_t i = lo; i < hi; ++i) {
        bump();
        int other = other_is_s2 ? v[i].s2 : v[i].s1;
        if (!chosen_[other]) continue;
        int u = v[i].u;
        mycount_[u]--;
        dec(u, other);
        dec(u, s);
        touch(u);
      }
    };
    scan(inst_.by_s1, inst_.s1_start[s], inst_.s1_start[s + 1], true);
    scan(inst_.by_s2, inst_.s2_start[s], inst_.s2_start[s + 1], false);
    int uc = inst_.facility_customer[s];
    if (uc >= 0) touch(uc);  // s no longer self-covers its customer
    for (int u : affected_) mark_required(u);
  }

  std::vector<int> cover() const {
    std::vector<int> out;
    for (int s = 0; s < inst_.num_facilities; ++s)
      if (chosen_[s]) out.push_back(s);
    return out;
  }

 private:
  std::size_t node(int u, int s) const {
    return static_cast<std::size_t>(u) * inst_.num_facilities + s;
  }
  std::size_t bucket(int u, int count) const {
    return static_cast<std::size_t>(u) * (inst_.num_facilities + 1) + count;
  }

  void link(int u, int s, int count) {
    std::size_t n = node(u, s);
    std::size_t b = bucket(u, count);
    node_prev_[n] = -1;
    node_next_[n] = head_[b];
    if (head_[b] >= 0) node_prev_[head_[b]] = static_cast<int>(n);
    head_[b] = static_cast<int>(n);
  }

  void unlink(int u, int s, int count) {
    std::size_t n = node(u, s);
    int prev = node_prev_[n], next = node_next_[n];
    if (prev >= 0)
      node_next_[prev] = next;
    else
      head_[bucket(u, count)] = next;
    if (next >= 0) node_prev_[next] = prev;
  }

  void dec(int u, int s) {
    int& count = cc_[node(u, s)];
    unlink(u, s, count);
    if (--count > 0) link(u, s, count);
  }

  void mark_required(int u) {
    int self = inst_.self_facility[u];
    if (self >= 0 && chosen_[self]) {
      // Self-covered customer: its own facility becomes required only once
      // no valid pairs remain for it.
      if (mycount_[u] == 0) required_[self] = 1;
      return;
    }
    // Covered by pairs only: facilities appearing in every valid pair.
    for (int n = head_[bucket(u, mycount_[u])]; n >= 0; n = node_next_[n])
      required_[static_cast<int>(n % inst_.num_facilities)] = 1;
  }

  void bump() {
    if (accesses_) ++*accesses_;
  }

  const ScpInstance& inst_;
  std::size_t* accesses_;
  std::vector<std::uint8_t> chosen_;
  std::vector<int> mycount_;
  std::vector<int> cc_;
  std::vector<int> head_;
  std::vector<int> node_next_, node_prev_;
  std::vector<std::uint8_t> required_;
  std::vector<int> affected_;
  std::vector<int> affected_stamp_;
  int affected_epoch_ = 0;
};

}  // namespace

GreedyResult greedy_construct(const ScpInstance& inst,
                              const GreedyOptions& opts) {
  SplitMix64 rng(opts.rng_seed);
  Builder b(inst, &rng);
  if (opts.start_mode == StartMode::best_pair)
    b.start_best_pair();
  else
    b.start_random_customer();
  return b.finish();
}

GreedyResult greedy_construct_from(const ScpInstance& inst,
                                   const std::vector<int>& initial,
                                   SplitMix64& rng) {
  Builder b(inst, &rng);
  for (int s : initial) b.add(s);
  return b.finish();
}

std::vector<int> greedy_complete(const ScpInstance& inst,
                                 const std::vector<int>& initial) {
  Builder b(inst, nullptr);
  for (int s : initial) b.add(s);
  return b.finish().cover;
}

std::vector<int> minimalize(const ScpInstance& inst,
                            const std::vector<int>& cover_in_order,
                            DeleteMode mode, SplitMix64& rng,
                            std::size_t* triple_accesses) {
  std::vector<int> order = cover_in_order;
  if (mode == DeleteMode::reverse)
    std::reverse(order.begin(), order.end());
  else
    rng.shuffle(order);
  Minimalizer m(inst, cover_in_order, triple_accesses);
  for (int s : order)
    if (m.removable(s)) m.remove(s);
  return m.cover();
}

GreedyResult greedy_run(const ScpInstance& inst, const GreedyOptions& opts) {
  GreedyResult res = greedy_construct(inst, opts);
  SplitMix64 rng(derive_seed(opts.rng_seed, 0x6d696e));  // minimalize stream
  res.cover = minimalize(inst, res.add_order, opts.delete_mode, rng,
                         &res.triple_accesses);
  return res;
}

GreedyOptions greedy_combo(int iteration, int iterations,
                           std::uint64_t base_seed) {
  static constexpr StartMode starts[4] = {
      StartMode::best_pair, StartMode::best_pair, StartMode::random_customer,
      StartMode::random_customer};
  static constexpr DeleteMode deletes[4] = {
      DeleteMode::reverse, DeleteMode::random, DeleteMode::reverse,
      DeleteMode::random};
  int base = iterations / 4;
  int rem = iterations % 4;
  // Equal blocks; the remainder goes to the earlier blocks.
  int combo = 3;
  for (int k = 0, acc = 0; k < 4; ++k) {
    acc += base + (k < rem ? 1 : 0);
    if (iteration < acc) {
      combo = k;
      break;
    }
  }
  GreedyOptions opts;
  opts.start_mode = starts[combo];
  opts.delete_mode = deletes[combo];
  opts.rng_seed = base_seed + static_cast<std::uint64_t>(iteration);
  return opts;
}

MultiResult greedy_multi(const ScpInstance& inst, int iterations,
                         std::uint64_t base_seed, int jobs) {
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  MultiResult out;
  out.sizes.assign(iterations, 0);
  std::vector<std::vector<int>> covers(iterations);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&](int lo, int hi) {
    try {
      for (int i = lo; i < hi; ++i) {
        GreedyResult r =
            greedy_run(inst, greedy_combo(i, iterations, base_seed));
        out.sizes[i] = static_cast<int>(r.cover.size());
        covers[i] = std::move(r.cover);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  if (jobs <= 1) {
    work(0, iterations);
  } else {
    std::vector<std::thread> threads;
    int chunk = (iterations + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      int lo = t * chunk, hi = std::min(iterations, lo + chunk);
      if (lo < hi) threads.emplace_back(work, lo, hi);
    }
    for (auto& th : threads) th.join();
  }
  if (error) std::rethrow_exception(error);
  int best = 0;
  for (int i = 1; i < iterations; ++i)
    if (out.sizes[i] < out.sizes[best]) best = i;
  out.best_iteration = best;
  out.best_cover = covers[best];
  return out;
}

}  // namespace paircover
