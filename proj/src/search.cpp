#include "morsekit/search.hpp"

#include <algorithm>
#include <climits>
#include <thread>
#include <unordered_set>

#include "morsekit/homology.hpp"
#include "morsekit/normalize.hpp"

namespace mtk {

namespace {

// ---------------------------------------------------------------- collapse

struct AliveKey {
  std::vector<std::uint64_t> bits;
  bool operator==(const AliveKey&) const = default;
};

struct AliveKeyHash {
  std::size_t operator()(const AliveKey& k) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : k.bits) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }
};

class CollapseSearch {
public:
  CollapseSearch(const SimplicialComplex& k, std::uint64_t nodeCap)
      : k_(k), nodeCap_(nodeCap), alive_(k.cellCount(), 1),
        aliveCofaces_(k.cellCount(), 0), aliveCount_(k.cellCount()) {
    for (CellId c = 0; c < k.cellCount(); ++c)
      aliveCofaces_[c] = static_cast<int>(k.cofaces(c).size());
  }

  CollapseResult run() {
    CollapseResult r;
    if (!freeFaces().empty() || aliveCount_ == 1) {
      r.collapsible = search();
    } else {
      r.obstruction = "no free faces: every cell has 0 or >= 2 cofaces";
    }
    r.stats = stats_;
    r.exact = !stats_.truncated;
    if (r.collapsible) r.sequence = sequence_;
    if (stats_.truncated) r.collapsible = false;
    return r;
  }

private:
  // nu is free iff its unique alive coface is itself maximal
  std::vector<std::pair<CellId, CellId>> freeFaces() const {
    std::vector<std::pair<CellId, CellId>> out;
    for (CellId c = 0; c < k_.cellCount(); ++c) {
      if (!alive_[c] || aliveCofaces_[c] != 1) continue;
      for (const auto& cf : k_.cofaces(c)) {
        if (!alive_[cf.cell]) continue;
        if (aliveCofaces_[cf.cell] == 0) out.push_back({c, cf.cell});
        break;
      }
    }
    return out;
  }

  void remove(CellId c) {
    alive_[c] = 0;
    --aliveCount_;
    for (const auto& f : k_.faces(c)) --aliveCofaces_[f.cell];
  }
  void restore(CellId c) {
    alive_[c] = 1;
    ++aliveCount_;
    for (const auto& f : k_.faces(c)) ++aliveCofaces_[f.cell];
  }

  AliveKey key() const {
    AliveKey key;
    key.bits.assign((k_.cellCount() + 63) / 64, 0);
    for (CellId c = 0; c < k_.cellCount(); ++c)
      if (alive_[c]) key.bits[c / 64] |= std::uint64_t(1) << (c % 64);
    return key;
  }

  bool search() {
    if (aliveCount_ == 1) return true;
    if (stats_.nodes >= nodeCap_) {
      stats_.truncated = true;
      return false;
    }
    ++stats_.nodes;
    const auto candidates = freeFaces();
    if (candidates.empty()) return false;
    if (failed_.contains(key())) return false;
    for (const auto& [nu, sigma] : candidates) {
      remove(sigma);
      remove(nu);
      sequence_.push_back({nu, sigma});
      if (search()) return true;
      sequence_.pop_back();
      restore(nu);
      restore(sigma);
      if (stats_.truncated) return false;
    }
    failed_.insert(key());
    return false;
  }

  const SimplicialComplex& k_;
  std::uint64_t nodeCap_;
  std::vector<char> alive_;
  std::vector<int> aliveCofaces_;
  int aliveCount_;
  SearchStats stats_;
  std::vector<std::pair<CellId, CellId>> sequence_;
  std::unordered_set<AliveKey, AliveKeyHash> failed_;
};

// ------------------------------------------------- matching enumeration

// Depth-first enumeration of acyclic matchings, deciding each cell at its
// position in id order: match with an undecided coface (in id order), or
// leave critical, tried last. Every matching is produced exactly once.
class MatchingEnumerator {
public:
  MatchingEnumerator(const SimplicialComplex& k, std::uint64_t nodeCap)
      : k_(k), nodeCap_(nodeCap) {
    v_.host = &k;
    v_.pairUp.assign(k.cellCount(), -1);
    v_.pairDown.assign(k.cellCount(), -1);
    committed_.assign(k.dim() + 1, 0);
    critical_.assign(k.cellCount(), 0);

    // weak Morse lower bounds: unreduced rational Betti numbers
    const auto profile = homology(k);
    bettiLB_ = profile.bettiUnreduced;
    chiParity_ = static_cast<int>(((k.eulerCharacteristic() % 2) + 2) % 2);
  }

  // Phase 1: minimum total critical count. INT_MAX if nothing completed
  // within the budget. A proven lower bound lets the search stop as soon
  // as an incumbent attains it; minProven() then reports optimality even
  // though the tree was not exhausted.
  int findMinTotal(int provenLB = 0) {
    incumbent_ = INT_MAX;
    target_ = -1;
    provenLB_ = provenLB;
    stopped_ = false;
    descend(0, 0);
    return incumbent_;
  }

  bool minProven() const {
    return incumbent_ != INT_MAX &&
           (incumbent_ == provenLB_ || !stats.truncated);
  }

  // Phase 2: every matching with exactly `target` critical cells; the
  // callback returns false to stop the search (treated as exact).
  void enumerate(int target,
                 const std::function<bool(
                     const std::vector<std::pair<CellId, CellId>>&)>& cb) {
    incumbent_ = INT_MAX;
    target_ = target;
    callback_ = &cb;
    stopped_ = false;
    descend(0, 0);
    callback_ = nullptr;
  }

  // best complete matching seen in phase 1 (incumbent witness)
  const std::vector<std::pair<CellId, CellId>>& bestPairs() const {
    return bestPairs_;
  }

  SearchStats stats;

private:
  int lowerBound(int committedTotal) const {
    long long lb = 0;
    for (std::size_t d = 0; d < committed_.size(); ++d)
      lb += std::max<long long>(committed_[d], bettiLB_[d]);
    if ((lb % 2 + 2) % 2 != chiParity_) ++lb;
    return static_cast<int>(std::max<long long>(lb, committedTotal));
  }

  bool pruned(int committedTotal) const {
    const int lb = lowerBound(committedTotal);
    if (target_ >= 0) return lb > target_;
    return lb >= incumbent_;
  }

  bool decided(CellId c) const {
    return v_.pairUp[c] != -1 || v_.pairDown[c] != -1 || critical_[c];
  }

  // Decide cells from the top dimension down (reverse id order): a cell
  // pairs with a not-yet-decided face, or stays critical. Top-down keeps
  // the branching factor at (dim+2) instead of the coface count.
  void descend(int pos, int committedTotal) {
    if (stopped_) return;
    if (stats.nodes >= nodeCap_) {
      stats.truncated = true;
      return;
    }
    ++stats.nodes;
    while (pos < k_.cellCount() && decided(k_.cellCount() - 1 - pos)) ++pos;
    if (pos == k_.cellCount()) {
      complete(committedTotal);
      return;
    }
    const CellId i = k_.cellCount() - 1 - pos;
    // match i downward
    for (const auto& fc : k_.faces(i)) {
      const CellId sigma = fc.cell;
      if (decided(sigma)) continue;
      if (!pairKeepsAcyclic(v_, sigma, i)) continue;
      v_.pairUp[sigma] = i;
      v_.pairDown[i] = sigma;
      pairs_.push_back({sigma, i});
      descend(pos + 1, committedTotal);
      pairs_.pop_back();
      v_.pairUp[sigma] = -1;
      v_.pairDown[i] = -1;
      if (stopped_ || stats.truncated) return;
    }
    // leave i critical
    const int d = k_.cellDim(i);
    ++committed_[d];
    critical_[i] = 1;
    if (!pruned(committedTotal + 1)) descend(pos + 1, committedTotal + 1);
    critical_[i] = 0;
    --committed_[d];
  }

  void complete(int total) {
    if (target_ >= 0) {
      if (total == target_ && callback_) {
        ++stats.nodes;
        if (!(*callback_)(pairs_)) stopped_ = true;
      }
      return;
    }
    if (total < incumbent_) {
      incumbent_ = total;
      bestPairs_ = pairs_;
      if (incumbent_ == provenLB_) stopped_ = true;
    }
  }

  const SimplicialComplex& k_;
  std::uint64_t nodeCap_;
  DiscreteVectorField v_;
  std::vector<std::pair<CellId, CellId>> pairs_;
  std::vector<int> committed_;
  std::vector<char> critical_;
  std::vector<long long> bettiLB_;
  int chiParity_ = 0;
  std::vector<std::pair<CellId, CellId>> bestPairs_;
  int incumbent_ = INT_MAX;
  int target_ = -1;
  int provenLB_ = 0;
  bool stopped_ = false;
  const std::function<bool(const std::vector<std::pair<CellId, CellId>>&)>*
      callback_ = nullptr;
};

// A search-free lower bound on the critical count: weak Morse
// inequalities plus Euler parity (the total is congruent to chi mod 2),
// sharpened by the fact that exactly the collapsible complexes admit a
// matching with a single critical cell.
struct ProvenBound {
  int value = 1;
  std::optional<CollapseResult> collapse;  // set when it was consulted
};

ProvenBound provenLowerBound(const SimplicialComplex& k,
                             std::uint64_t nodeCap) {
  const auto profile = homology(k);
  long long lb = 0;
  for (long long b : profile.bettiUnreduced) lb += b;
  const int parity =
      static_cast<int>(((k.eulerCharacteristic() % 2) + 2) % 2);
  if ((lb % 2 + 2) % 2 != parity) ++lb;
  ProvenBound out;
  out.value = static_cast<int>(std::max<long long>(1, lb));
  if (out.value == 1) {
    out.collapse = isCollapsible(k, nodeCap);
    if (out.collapse->exact && !out.collapse->collapsible)
      out.value = 3;  // 1 is impossible, 2 has the wrong parity
  }
  return out;
}

std::vector<int> criticalVectorOf(const SimplicialComplex& k,
                                  const std::vector<std::pair<CellId, CellId>>& pairs) {
  std::vector<int> counts(k.dim() + 1, 0);
  std::vector<char> matched(k.cellCount(), 0);
  for (const auto& [a, b] : pairs) matched[a] = matched[b] = 1;
  for (CellId c = 0; c < k.cellCount(); ++c)
    if (!matched[c]) ++counts[k.cellDim(c)];
  return counts;
}

}  // namespace

CollapseResult isCollapsible(const SimplicialComplex& k,
                             std::uint64_t nodeCap) {
  if (!k.connected()) throw InputError("complex must be connected");
  return CollapseSearch(k, nodeCap).run();
}

DiscreteVectorField prop3Witness(const SimplicialComplex& k,
                                 const CollapseResult& collapse) {
  if (!collapse.collapsible)
    throw InputError("complex is not collapsible; no witness exists");
  DiscreteVectorField v = validateField(k, collapse.sequence);
  const CriticalReport r = criticalReport(v);
  if (r.total != 1 || r.counts[0] != 1)
    throw InternalError("collapse sequence did not yield a single critical "
                        "vertex");
  if (nkf(v).value != 0)
    throw InternalError("collapse witness has a nonzero invariant");
  return v;
}

OptimalityResult minCriticalCells(const SimplicialComplex& k,
                                  std::uint64_t nodeCap,
                                  std::size_t witnessCap) {
  if (!k.connected()) throw InputError("complex must be connected");
  MatchingEnumerator e(k, nodeCap);
  const auto pb = provenLowerBound(k, nodeCap);
  OptimalityResult r;
  int best;
  std::vector<std::pair<CellId, CellId>> seed;
  bool minProven;
  if (pb.collapse && pb.collapse->collapsible) {
    best = 1;
    minProven = true;
    seed = pb.collapse->sequence;
    std::sort(seed.begin(), seed.end());
  } else {
    best = e.findMinTotal(pb.value);
    minProven = e.minProven();
    seed = e.bestPairs();
  }
  if (best == INT_MAX) {
    r.exact = false;
    r.stats = e.stats;
    return r;
  }
  r.total = best;
  if (!minProven) {
    // phase 1 ran out of budget: report the incumbent as an upper bound
    r.exact = false;
    r.stats = e.stats;
    r.witnesses = {seed};
    r.witnessCount = 1;
    r.criticalVector = criticalVectorOf(k, seed);
    return r;
  }

  std::uint64_t count = 0;
  std::vector<std::vector<std::pair<CellId, CellId>>> witnesses;
  e.enumerate(best, [&](const auto& pairs) {
    ++count;
    if (witnesses.size() < witnessCap) witnesses.push_back(pairs);
    return true;
  });
  r.stats = e.stats;
  r.exact = !e.stats.truncated;
  r.witnessCount = count;
  std::sort(witnesses.begin(), witnesses.end());
  r.witnesses = std::move(witnesses);
  if (r.witnesses.empty()) {
    r.witnesses = {seed};
    r.witnessCount = 1;
    r.exact = false;
  }
  r.criticalVector = criticalVectorOf(k, r.witnesses.front());

  // invariant checks on reported witnesses
  const auto profile = homology(k);
  for (const auto& w : r.witnesses) {
    const auto counts = criticalVectorOf(k, w);
    int total = 0;
    long long alt = 0;
    for (std::size_t d = 0; d < counts.size(); ++d) {
      total += counts[d];
      alt += (d % 2 == 0) ? counts[d] : -counts[d];
      if (counts[d] < profile.bettiUnreduced[d])
        throw InternalError("witness violates the weak Morse inequalities");
    }
    if (total != best || alt != k.eulerCharacteristic())
      throw InternalError("witness violates the Euler constraint");
  }
  return r;
}

NKResult nk(const SimplicialComplex& k, std::uint64_t nodeCap, int jobs) {
  if (!k.connected()) throw InputError("complex must be connected");
  if (jobs < 1) jobs = 1;
  NKResult r;
  const auto pb = provenLowerBound(k, nodeCap);
  if (pb.collapse && pb.collapse->collapsible) {
    // the collapse field is optimal (one critical cell) and its
    // invariant is 0, the global minimum over all fields
    const DiscreteVectorField v = prop3Witness(k, *pb.collapse);
    r.value = 0;
    r.witness = v.pairs;
    r.criticalVector = criticalVectorOf(k, v.pairs);
    r.exact = true;
    r.fieldsEnumerated = 1;
    r.stats = pb.collapse->stats;
    return r;
  }
  MatchingEnumerator e(k, nodeCap);
  const int best = e.findMinTotal(pb.value);
  if (best == INT_MAX) {
    r.exact = false;
    r.stats = e.stats;
    return r;
  }
  if (!e.minProven()) {
    const DiscreteVectorField v = validateField(k, e.bestPairs());
    const long long n = nkf(v).value;
    r.value = n < 0 ? -n : n;
    r.witness = e.bestPairs();
    r.criticalVector = criticalVectorOf(k, r.witness);
    r.exact = false;
    r.fieldsEnumerated = 1;
    r.stats = e.stats;
    return r;
  }

  std::vector<std::vector<std::pair<CellId, CellId>>> batch;
  const std::size_t batchSize = 512;
  long long bestValue = -1;
  std::vector<std::pair<CellId, CellId>> bestWitness;
  std::uint64_t enumerated = 0;

  // the enumerator maintains the acyclic-matching invariant, so skip the
  // full re-validation on this hot path
  auto evaluate = [&](const std::vector<std::pair<CellId, CellId>>& pairs) {
    DiscreteVectorField v;
    v.host = &k;
    v.pairs = pairs;
    v.pairUp.assign(k.cellCount(), -1);
    v.pairDown.assign(k.cellCount(), -1);
    for (const auto& [lo, hi] : pairs) {
      v.pairUp[lo] = hi;
      v.pairDown[hi] = lo;
    }
    const long long n = nkf(v).value;
    return n < 0 ? -n : n;
  };
  auto flush = [&]() {
    if (batch.empty()) return;
    std::vector<long long> values(batch.size());
    if (jobs == 1 || batch.size() < 2) {
      for (std::size_t i = 0; i < batch.size(); ++i)
        values[i] = evaluate(batch[i]);
    } else {
      const int workers = std::min<std::size_t>(jobs, batch.size());
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
          for (std::size_t i = w; i < batch.size(); i += workers)
            values[i] = evaluate(batch[i]);
        });
      for (auto& t : pool) t.join();
    }
    // merge in enumeration order so results are schedule-independent
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (bestValue == -1 || values[i] < bestValue ||
          (values[i] == bestValue && batch[i] < bestWitness)) {
        bestValue = values[i];
        bestWitness = batch[i];
      }
    }
    batch.clear();
  };

  e.enumerate(best, [&](const auto& pairs) {
    ++enumerated;
    batch.push_back(pairs);
    if (batch.size() >= batchSize) {
      flush();
      if (bestValue == 0) return false;  // 0 is the global minimum
    }
    return true;
  });
  flush();

  r.stats = e.stats;
  r.exact = !e.stats.truncated;
  r.fieldsEnumerated = enumerated;
  if (enumerated == 0) {
    // budget ran dry between the phases; incumbent is still an upper bound
    batch.push_back(e.bestPairs());
    flush();
    r.fieldsEnumerated = 1;
    r.exact = false;
  }
  r.value = bestValue;
  r.witness = bestWitness;
  r.criticalVector = criticalVectorOf(k, bestWitness);
  return r;
}

NkGraphResult nkGraph(const SimplicialComplex& g, std::uint64_t nodeCap) {
  if (g.dim() != 1) throw InputError("nk_graph requires a 1-complex");
  if (!g.connected()) throw InputError("graph must be connected");
  NkGraphResult r;
  r.result = nk(g, nodeCap);
  r.isTree = (g.fVector()[1] == g.fVector()[0] - 1);
  if (r.result.exact && (r.result.value == 0) != r.isTree)
    throw InternalError("graph invariant violated: value 0 iff tree");
  return r;
}

PlProbeResult plProbe(const SimplicialComplex& k, int depth,
                      std::uint64_t nodeCap, int jobs) {
  if (k.dim() > 2) throw InputError("pl probe requires dim <= 2");
  if (depth < 0 || depth > 2) throw InputError("probe depth must be 0..2");
  PlProbeResult r;
  SimplicialComplex current = k;  // copy; subdivisions replace it
  for (int j = 0; j <= depth; ++j) {
    if (j > 0) current = current.barycentricSubdivision();
    r.perDepth.push_back(nk(current, nodeCap, jobs));
  }
  r.best = r.perDepth[0].value;
  r.bestDepth = 0;
  r.exact = true;
  for (int j = 0; j <= depth; ++j) {
    if (!r.perDepth[j].exact) r.exact = false;
    if (r.perDepth[j].value < r.best) {
      r.best = r.perDepth[j].value;
      r.bestDepth = j;
    }
  }
  return r;
}

}  // namespace mtk
