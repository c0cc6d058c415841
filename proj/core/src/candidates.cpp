#include <algorithm>
#include <map>
#include <string>

#include "monotone.hpp"
#include "sumset/error.hpp"
#include "sumset/family.hpp"

namespace sumset {

namespace {

void check_shape(const ThinnedFamily& tf, const CandidateSelection& sel) {
  const std::size_t r = tf.r();
  if (sel.level > r)
    throw Error(ErrorKind::kInvalidArgument, "candidate level " + std::to_string(sel.level) +
                                                 " exceeds r = " + std::to_string(r));
  if (sel.i.size() != r || sel.j.size() != sel.level)
    throw Error(ErrorKind::kInvalidArgument,
                "candidate selection needs " + std::to_string(r) + " i's and " +
                    std::to_string(sel.level) + " j's");
  for (std::size_t v : sel.i)
    if (v > tf.m) throw Error(ErrorKind::kInvalidArgument, "candidate index beyond the limit");
  for (std::size_t v : sel.j)
    if (v > tf.m) throw Error(ErrorKind::kInvalidArgument, "candidate index beyond the limit");
}

}  // namespace

bool is_canonical_candidate(const ThinnedFamily& tf, const CandidateSelection& sel) {
  check_shape(tf, sel);
  const std::size_t level = sel.level;
  for (std::size_t t = 1; t < sel.i.size(); ++t)
    if (sel.i[t - 1] > sel.i[t]) return false;
  for (std::size_t t = 0; t < level; ++t)
    if (sel.i[t] >= sel.j[t]) return false;
  if (level == 0) return true;
  // i_{ℓ−1} < j_{ℓ−1} ≤ m, so δ^{ℓ−1}_{i_{ℓ−1}} exists.
  const Level floor = tf.delta_at(level - 1, sel.i[level - 1]);
  for (std::size_t t = 0; t < level; ++t)
    if (sel.j[t] != tf.m && tf.delta_at(t, sel.j[t]) <= floor) return false;
  return true;
}

std::vector<Coord> candidate_tuple(const ThinnedFamily& tf, const CandidateSelection& sel) {
  check_shape(tf, sel);
  std::vector<Coord> out;
  out.reserve(tf.r() + sel.level);
  for (std::size_t t = 0; t < tf.r(); ++t) {
    out.push_back(tf.alpha(t, sel.i[t]));
    if (t < sel.level) out.push_back(tf.alpha(t, sel.j[t]));
  }
  return out;
}

std::vector<CandidateSelection> canonical_candidates(const ThinnedFamily& tf, std::size_t level) {
  const std::size_t r = tf.r();
  if (level > r)
    throw Error(ErrorKind::kInvalidArgument, "candidate level " + std::to_string(level) +
                                                 " exceeds r = " + std::to_string(r));
  std::vector<CandidateSelection> out;
  detail::for_each_monotone(r, tf.m + 1, [&](std::span<const std::size_t> i) {
    CandidateSelection sel{level, {i.begin(), i.end()}, std::vector<std::size_t>(level)};
    for (std::size_t t = 0; t < level; ++t) {
      if (sel.i[t] >= tf.m) return true;
      sel.j[t] = sel.i[t] + 1;
    }
    // Odometer over j_t ∈ (i_t, m].
    while (true) {
      if (is_canonical_candidate(tf, sel)) out.push_back(sel);
      std::size_t t = level;
      while (t > 0 && sel.j[t - 1] == tf.m) {
        sel.j[t - 1] = sel.i[t - 1] + 1;
        --t;
      }
      if (t == 0) break;
      ++sel.j[t - 1];
    }
    return true;
  });
  return out;
}

CandidateSelection distinguished_candidate(const ThinnedFamily& tf, std::size_t level,
                                           std::size_t k, std::size_t i) {
  const std::size_t r = tf.r();
  if (!(level <= k && k <= r))
    throw Error(ErrorKind::kInvalidArgument, "distinguished candidate needs l <= k <= r");
  if (k > level && i >= tf.m)
    throw Error(ErrorKind::kInvalidArgument, "distinguished candidate needs i < m");
  CandidateSelection sel{level, std::vector<std::size_t>(r, tf.m), std::vector<std::size_t>(level, tf.m)};
  for (std::size_t t = 0; t < level; ++t) sel.i[t] = 0;
  for (std::size_t t = level; t < k; ++t) sel.i[t] = i;
  return sel;
}

std::vector<std::uint8_t> compute_ev(const EmbeddedWorld& w, const ThinnedFamily& tf,
                                     std::span<const std::size_t> i, std::size_t k) {
  if (i.size() != tf.r())
    throw Error(ErrorKind::kInvalidArgument, "ev needs one index per block");
  if (k >= tf.r()) throw Error(ErrorKind::kInvalidArgument, "ev block out of range");
  if (k == 0 || i[k] >= tf.m) return {};
  const Level level = tf.delta_at(k, i[k]);
  std::vector<std::uint8_t> ev;
  ev.reserve(2 * k);
  for (std::size_t t = 0; t < k; ++t) {
    ev.push_back(w.image(tf.alpha(t, i[t])).bit(level));
    ev.push_back(w.image(tf.limit(t)).bit(level));
  }
  return ev;
}

ThinnedFamily uniformize_ev(const EmbeddedWorld& w, const ThinnedFamily& tf, std::size_t target,
                            SearchLimits limits) {
  const std::size_t r = tf.r();
  const std::size_t m = tf.m;
  if (target == 0) throw Error(ErrorKind::kInvalidArgument, "uniformize_ev needs target >= 1");
  if (target > m)
    throw Error(ErrorKind::kUniformization, "uniformize_ev: target " + std::to_string(target) +
                                                " exceeds the sequence length " +
                                                std::to_string(m));

  // Colour of a d-set S: the ev of every non-decreasing (k+1)-prefix over S,
  // for k = 1..r−1. Prefixes suffice because ev(i, k) only reads i_0..i_k.
  const std::size_t d = std::min(r, target);
  using Signature = std::vector<std::vector<std::uint8_t>>;
  std::map<Signature, Colour> ids;
  std::vector<bool> uniform;
  auto rule = [&](std::span<const std::size_t> set) -> Colour {
    Signature sig;
    bool constant = true;
    for (std::size_t k = 1; k < r; ++k) {
      std::optional<std::vector<std::uint8_t>> first;
      std::vector<std::size_t> full(r, m);
      detail::for_each_monotone(k + 1, set.size(), [&](std::span<const std::size_t> pos) {
        for (std::size_t t = 0; t <= k; ++t) full[t] = set[pos[t]];
        auto ev = compute_ev(w, tf, full, k);
        if (!first)
          first = ev;
        else if (ev != *first)
          constant = false;
        sig.push_back(std::move(ev));
        return true;
      });
    }
    auto [it, inserted] = ids.emplace(std::move(sig), static_cast<Colour>(ids.size()));
    if (inserted) uniform.push_back(constant);
    return it->second;
  };
  std::vector<Colour> table(binomial(m, d));
  std::vector<std::size_t> ground(m);
  for (std::size_t p = 0; p < m; ++p) ground[p] = p;
  for_each_subset<std::size_t>(ground, d, [&](std::span<const std::size_t> set) {
    table[colex_rank(set)] = rule(set);
    return true;
  });
  HypergraphColouring h(m, d, std::max<Colour>(static_cast<Colour>(ids.size()), 1),
                        std::move(table));
  auto chosen = ramsey_homogeneous(h, target, limits, [&](Colour c) { return bool(uniform[c]); });
  if (!chosen)
    throw Error(ErrorKind::kUniformization,
                "uniformize_ev: no index set of size " + std::to_string(target) + " among " +
                    std::to_string(m) + " on which ev is uniform (" + std::to_string(ids.size()) +
                    " distinct signatures)");

  ThinnedFamily out;
  out.m = target;
  out.u = tf.u;
  out.nu = tf.nu;
  for (std::size_t l = 0; l < r; ++l) {
    std::vector<Coord> seq;
    std::vector<Level> deltas;
    for (std::size_t p : *chosen) {
      seq.push_back(tf.alpha(l, p));
      deltas.push_back(tf.delta_at(l, p));
    }
    seq.push_back(tf.limit(l));
    out.sequences.push_back(std::move(seq));
    out.deltas.push_back(std::move(deltas));
  }
  std::vector<std::vector<std::uint8_t>> e(r);
  std::vector<std::size_t> base(r, 0);
  for (std::size_t k = 1; k < r; ++k) e[k] = compute_ev(w, out, base, k);
  out.e_frak = std::move(e);
  if (auto violation = thinned_family_violation(w, out))
    throw Error(ErrorKind::kInternal, "uniformize_ev produced an invalid family: " + *violation);
  return out;
}

std::optional<std::string> candidate_uniformity_violation(const EmbeddedWorld& w,
                                                          const ThinnedFamily& tf) {
  auto describe = [&](const CandidateSelection& a, const CandidateSelection& b) {
    auto one = [](const CandidateSelection& s) {
      std::string out = "i=(";
      for (std::size_t t = 0; t < s.i.size(); ++t) out += (t ? "," : "") + std::to_string(s.i[t]);
      out += ") j=(";
      for (std::size_t t = 0; t < s.j.size(); ++t) out += (t ? "," : "") + std::to_string(s.j[t]);
      return out + ")";
    };
    return one(a) + " vs " + one(b) + " at level " + std::to_string(a.level);
  };
  for (std::size_t level = 0; level <= tf.r(); ++level) {
    std::map<std::vector<std::size_t>, std::pair<CandidateSelection, SimilarityType>> by_i;
    std::optional<std::pair<CandidateSelection, SimilarityType>> first;
    for (const auto& sel : canonical_candidates(tf, level)) {
      SimilarityType type = similarity_type(w.image_of(candidate_tuple(tf, sel)));
      auto [it, inserted] = by_i.emplace(sel.i, std::make_pair(sel, type));
      if (!inserted && !(it->second.second == type))
        return "j-dependence: " + describe(it->second.first, sel);
      if (tf.e_frak) {
        if (!first)
          first = std::make_pair(sel, type);
        else if (!(first->second == type))
          return "non-uniform candidates: " + describe(first->first, sel);
      }
    }
  }
  return std::nullopt;
}

}  // namespace sumset
