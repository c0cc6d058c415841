#include "sumset/adversary.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "sumset/error.hpp"
#include "sumset/world.hpp"

namespace sumset {

AdditiveStructure::AdditiveStructure(Kind kind, std::size_t n, std::size_t dims)
    : kind_(kind), n_(n), dims_(dims), size_(0) {
  switch (kind) {
    case Kind::kInterval:
      size_ = n + 1;
      break;
    case Kind::kCyclic:
      if (n == 0) throw Error(ErrorKind::kInvalidArgument, "cyclic group needs n >= 1");
      size_ = n;
      break;
    case Kind::kTruncatedSum: {
      if (dims == 0) throw Error(ErrorKind::kInvalidArgument, "truncated sum needs dims >= 1");
      size_ = 1;
      for (std::size_t d = 0; d < dims; ++d) {
        if (size_ > 1'000'000 / (n + 1))
          throw Error(ErrorKind::kInvalidArgument, "truncated sum carrier is too large");
        size_ *= n + 1;
      }
      break;
    }
  }
}

AdditiveStructure AdditiveStructure::interval(std::size_t n) { return {Kind::kInterval, n, 1}; }
AdditiveStructure AdditiveStructure::cyclic(std::size_t n) { return {Kind::kCyclic, n, 1}; }
AdditiveStructure AdditiveStructure::truncated_sum(std::size_t dims, std::size_t cap) {
  return {Kind::kTruncatedSum, cap, dims};
}

AdditiveStructure AdditiveStructure::parse(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream in(spec);
  for (std::string part; std::getline(in, part, ':');) parts.push_back(part);
  auto number = [&](const std::string& text) -> std::size_t {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(text, &used);
      if (used == text.size() && !text.empty() && text[0] != '-') return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw Error(ErrorKind::kParse, "bad number '" + text + "' in structure '" + spec + "'");
  };
  if (parts.size() == 2 && parts[0] == "interval") return interval(number(parts[1]));
  if (parts.size() == 2 && parts[0] == "cyclic") return cyclic(number(parts[1]));
  if (parts.size() == 3 && parts[0] == "sum") return truncated_sum(number(parts[1]), number(parts[2]));
  throw Error(ErrorKind::kParse,
              "unknown structure '" + spec + "' (expected interval:N, cyclic:N or sum:D:CAP)");
}

std::string AdditiveStructure::name() const {
  switch (kind_) {
    case Kind::kInterval:
      return "interval:" + std::to_string(n_);
    case Kind::kCyclic:
      return "cyclic:" + std::to_string(n_);
    case Kind::kTruncatedSum:
      return "sum:" + std::to_string(dims_) + ":" + std::to_string(n_);
  }
  return {};
}

std::string AdditiveStructure::label(std::size_t element) const {
  if (kind_ != Kind::kTruncatedSum) return std::to_string(element);
  std::string out = "(";
  for (std::size_t d = 0; d < dims_; ++d) {
    if (d) out += ",";
    out += std::to_string(element % (n_ + 1));
    element /= n_ + 1;
  }
  return out + ")";
}

std::optional<std::size_t> AdditiveStructure::add(std::size_t a, std::size_t b) const {
  if (a >= size_ || b >= size_) throw Error(ErrorKind::kDomain, "element outside the carrier");
  switch (kind_) {
    case Kind::kInterval:
      if (a + b > n_) return std::nullopt;
      return a + b;
    case Kind::kCyclic:
      return (a + b) % n_;
    case Kind::kTruncatedSum: {
      std::size_t out = 0, scale = 1;
      for (std::size_t d = 0; d < dims_; ++d) {
        std::size_t s = a % (n_ + 1) + b % (n_ + 1);
        if (s > n_) return std::nullopt;
        out += s * scale;
        scale *= n_ + 1;
        a /= n_ + 1;
        b /= n_ + 1;
      }
      return out;
    }
  }
  return std::nullopt;
}

namespace {

// X+X as a sorted list of carrier elements, or nothing when some sum is
// undefined.
std::optional<std::vector<std::size_t>> sumset_of(const AdditiveStructure& s,
                                                  std::span<const std::size_t> x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i; j < x.size(); ++j) {
      auto v = s.add(x[i], x[j]);
      if (!v) return std::nullopt;
      out.push_back(*v);
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> carrier(const AdditiveStructure& s) {
  std::vector<std::size_t> out(s.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = e;
  return out;
}

constexpr std::uint64_t kMaxSubsets = 20'000'000;

}  // namespace

BadCheck verify_bad(const AdditiveStructure& s, const std::vector<Colour>& colouring,
                    std::size_t m) {
  if (colouring.size() != s.size())
    throw Error(ErrorKind::kInvalidArgument, "colouring does not cover the carrier");
  BadCheck result;
  const auto elements = carrier(s);
  for_each_subset<std::size_t>(elements, m, [&](std::span<const std::size_t> x) {
    auto sums = sumset_of(s, x);
    if (!sums) return true;
    for (std::size_t v : *sums)
      if (colouring[v] != colouring[sums->front()]) return true;
    result.bad = false;
    result.witness = std::vector<std::size_t>(x.begin(), x.end());
    return false;
  });
  return result;
}

std::string to_string(SearchReport::Outcome outcome) {
  switch (outcome) {
    case SearchReport::Outcome::kFound:
      return "found";
    case SearchReport::Outcome::kNoneExists:
      return "none-exists";
    case SearchReport::Outcome::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

namespace {

struct Counters {
  std::uint64_t nodes = 0;
  std::uint64_t prunes = 0;
};

// Outcome of exploring one subtree below a fixed prefix.
struct ShardResult {
  Counters counters;
  bool exhausted = false;
  std::optional<std::vector<Colour>> found;
};

class Backtracker {
 public:
  Backtracker(const AdditiveStructure& s, std::size_t r, std::size_t m) : n_(s.size()), r_(r) {
    if (binomial(s.size(), m) > kMaxSubsets)
      throw Error(ErrorKind::kResource, "find_bad_colouring: C(" + std::to_string(s.size()) +
                                            "," + std::to_string(m) + ") m-sets is too many");
    buckets_.resize(n_);
    const auto elements = carrier(s);
    for_each_subset<std::size_t>(elements, m, [&](std::span<const std::size_t> x) {
      if (auto sums = sumset_of(s, x)) {
        buckets_[sums->back()].push_back(std::move(*sums));
        ++admissible_;
      }
      return true;
    });
  }

  std::uint64_t admissible() const noexcept { return admissible_; }
  std::size_t size() const noexcept { return n_; }

  /// Valid prefixes of length p in DFS order, with the counters spent.
  std::vector<std::vector<Colour>> prefixes(std::size_t p, Counters& counters) const {
    std::vector<std::vector<Colour>> out;
    std::vector<Colour> colours;
    enumerate(colours, p, counters, out);
    return out;
  }

  ShardResult explore(const std::vector<Colour>& prefix, std::uint64_t max_nodes,
                      std::chrono::steady_clock::time_point deadline, bool timed,
                      const std::atomic<bool>* stop) const {
    ShardResult result;
    std::vector<Colour> colours = prefix;
    colours.resize(n_);
    Colour used = 0;
    for (Colour c : prefix) used = std::max<Colour>(used, c + 1);
    Frame f{colours, result, max_nodes, deadline, timed, stop};
    if (descend(f, prefix.size(), used)) result.found = colours;
    return result;
  }

 private:
  struct Frame {
    std::vector<Colour>& colours;
    ShardResult& result;
    std::uint64_t max_nodes;
    std::chrono::steady_clock::time_point deadline;
    bool timed;
    const std::atomic<bool>* stop;
  };

  // Some m-set whose sumset tops out at e is now monochromatic.
  bool violates(const std::vector<Colour>& colours, std::size_t e) const {
    for (const auto& sums : buckets_[e]) {
      const Colour c = colours[sums.front()];
      bool mono = true;
      for (std::size_t v : sums)
        if (colours[v] != c) {
          mono = false;
          break;
        }
      if (mono) return true;
    }
    return false;
  }

  void enumerate(std::vector<Colour>& colours, std::size_t p, Counters& counters,
                 std::vector<std::vector<Colour>>& out) const {
    if (colours.size() == p) {
      out.push_back(colours);
      return;
    }
    Colour used = 0;
    for (Colour c : colours) used = std::max<Colour>(used, c + 1);
    const std::size_t e = colours.size();
    for (Colour c = 0; c < r_ && c <= used; ++c) {
      ++counters.nodes;
      colours.push_back(c);
      std::vector<Colour> full = colours;
      full.resize(n_);
      if (violates(full, e))
        ++counters.prunes;
      else
        enumerate(colours, p, counters, out);
      colours.pop_back();
    }
  }

  // True when a complete bad colouring has been reached.
  bool descend(Frame& f, std::size_t e, Colour used) const {
    if (e == n_) return true;
    for (Colour c = 0; c < r_ && c <= used; ++c) {
      if (f.result.counters.nodes >= f.max_nodes) {
        f.result.exhausted = true;
        return false;
      }
      ++f.result.counters.nodes;
      if ((f.result.counters.nodes & 0xfff) == 0) {
        if ((f.timed && std::chrono::steady_clock::now() > f.deadline) ||
            (f.stop && f.stop->load(std::memory_order_relaxed))) {
          f.result.exhausted = true;
          return false;
        }
      }
      f.colours[e] = c;
      if (violates(f.colours, e)) {
        ++f.result.counters.prunes;
        continue;
      }
      if (descend(f, e + 1, std::max<Colour>(used, c + 1))) return true;
      if (f.result.exhausted) return false;
    }
    return false;
  }

  std::size_t n_;
  Colour r_;
  std::vector<std::vector<std::vector<std::size_t>>> buckets_;
  std::uint64_t admissible_ = 0;
};

}  // namespace

SearchReport find_bad_colouring(const AdditiveStructure& s, std::size_t r, std::size_t m,
                                SearchBudget budget, std::size_t jobs) {
  if (m < 2)
    throw Error(ErrorKind::kInvalidArgument,
                "find_bad_colouring needs m >= 2: a singleton X always has a monochromatic X+X");
  if (r == 0) throw Error(ErrorKind::kInvalidArgument, "find_bad_colouring needs r >= 1");
  SearchReport report;
  report.structure = s.name();
  report.r = r;
  report.m = m;
  report.symmetry = "colour-permutation: colour c is used only after colours 0..c-1";

  Backtracker search(s, r, m);
  report.admissible_sets = search.admissible();
  const auto start = std::chrono::steady_clock::now();
  const bool timed = budget.max_seconds > 0;
  const auto deadline =
      start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                  std::chrono::duration<double>(budget.max_seconds));

  // The shard layout depends only on the structure, never on `jobs`, so the
  // reported statistics are identical for every worker count.
  const std::size_t depth = std::min<std::size_t>(search.size(), 6);
  Counters head;
  auto prefixes = search.prefixes(depth, head);
  auto exhausted = [&](std::uint64_t nodes) {
    report.outcome = SearchReport::Outcome::kBudgetExhausted;
    report.nodes = nodes;
    return report;
  };
  if (head.nodes > budget.max_nodes) return exhausted(budget.max_nodes);
  report.prunes = head.prunes;

  std::vector<std::optional<ShardResult>> results(prefixes.size());
  auto run_shard = [&](std::size_t p, const std::atomic<bool>* stop) {
    results[p] = search.explore(prefixes[p], budget.max_nodes, deadline, timed, stop);
  };
  if (jobs <= 1 || prefixes.size() <= 1) {
    std::uint64_t spent = head.nodes;
    for (std::size_t p = 0; p < prefixes.size(); ++p) {
      results[p] = search.explore(prefixes[p], budget.max_nodes - spent, deadline, timed, nullptr);
      spent += results[p]->counters.nodes;
      if (results[p]->found || results[p]->exhausted) break;
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_found{prefixes.size()};
    std::atomic<bool> never{false};
    std::vector<std::thread> workers;
    for (std::size_t t = 0; t < jobs; ++t)
      workers.emplace_back([&] {
        for (std::size_t p; (p = next.fetch_add(1)) < prefixes.size();) {
          if (p > first_found.load()) break;
          run_shard(p, &never);
          if (results[p]->found) {
            std::size_t cur = first_found.load();
            while (p < cur && !first_found.compare_exchange_weak(cur, p)) {
            }
          }
        }
      });
    for (auto& w : workers) w.join();
  }

  // Replay the shards in sequential order against the global budget.
  std::uint64_t spent = head.nodes;
  for (std::size_t p = 0; p < prefixes.size(); ++p) {
    const ShardResult& res = *results[p];
    if (res.exhausted && !res.found) return exhausted(std::min(spent + res.counters.nodes, budget.max_nodes));
    if (spent + res.counters.nodes > budget.max_nodes) return exhausted(budget.max_nodes);
    spent += res.counters.nodes;
    report.prunes += res.counters.prunes;
    if (res.found) {
      auto check = verify_bad(s, *res.found, m);
      if (!check.bad)
        throw Error(ErrorKind::kInternal, "find_bad_colouring produced a colouring with a witness");
      report.outcome = SearchReport::Outcome::kFound;
      report.colouring = res.found;
      report.nodes = spent;
      return report;
    }
  }
  report.outcome = SearchReport::Outcome::kNoneExists;
  report.nodes = spent;
  return report;
}

EstimateReport estimate_r(const AdditiveStructure& s, std::size_t m, std::size_t r_max,
                          SearchBudget budget, std::size_t jobs) {
  if (m < 2)
    throw Error(ErrorKind::kInvalidArgument,
                "estimate_r needs m >= 2: with m = 1 no number of colours works");
  EstimateReport out;
  out.structure = s.name();
  out.m = m;
  out.r_max = r_max;
  bool refuted_below = true;
  for (std::size_t r = 1; r <= r_max; ++r) {
    SearchReport level = find_bad_colouring(s, r, m, budget, jobs);
    const auto outcome = level.outcome;
    out.levels.push_back(std::move(level));
    if (outcome == SearchReport::Outcome::kFound) {
      out.minimal_r = r;
      out.conclusive = refuted_below;
      return out;
    }
    if (outcome == SearchReport::Outcome::kBudgetExhausted) refuted_below = false;
  }
  out.conclusive = refuted_below;
  return out;
}

}  // namespace sumset
