// Certificate replay. Deliberately shares no code with the constructions in
// extraction.cpp: element arithmetic, pattern shapes and splitting levels
// are all recomputed here from first principles.

#include <algorithm>
#include <map>
#include <string>

#include "sumset/error.hpp"
#include "sumset/extraction.hpp"

namespace sumset {

namespace {

using Entries = std::map<Coord, Value>;

Entries plus(const Entries& x, const Entries& y) {
  Entries out = x;
  for (const auto& [coord, value] : y) out[coord] += value;
  return out;
}

// True iff the values read in coordinate order are 2n twos then r−n fours.
bool has_shape(const Entries& e, std::size_t r, std::size_t n) {
  if (e.size() != r + n) return false;
  std::size_t p = 0;
  for (const auto& [coord, value] : e) {
    if (value != (p < 2 * n ? 2u : 4u)) return false;
    ++p;
  }
  return true;
}

std::size_t first_difference(const BitSeq& a, const BitSeq& b) {
  std::size_t level = 0;
  while (level < a.depth() && a.bit(level) == b.bit(level)) ++level;
  return level;
}

class Replay {
 public:
  Replay(const PointColouring& c, const ExtractionCertificate& cert) : c_(c), cert_(cert) {}

  VerifyResult run() {
    const std::size_t r = cert_.r, level = cert_.level, k = cert_.k;
    if (r == 0 || !(level < k && k <= r) || cert_.size == 0)
      return fail("certificate header is inconsistent (r, l, k, size)");
    if (cert_.x.size() != cert_.size) fail("certificate lists " + std::to_string(cert_.x.size()) +
                                           " elements, size says " + std::to_string(cert_.size));
    if (inputs_digest(cert_) != cert_.inputs_digest) fail("inputs digest does not match");

    std::optional<std::vector<Entries>> rebuilt;
    if (cert_.mode == ExtractionCertificate::Mode::kLemma) {
      if (!cert_.lemma) return fail("lemma certificate without lemma data");
      rebuilt = replay_lemma();
    } else {
      if (!cert_.pipeline) return fail("pipeline certificate without pipeline data");
      rebuilt = replay_pipeline();
    }
    if (!rebuilt) return result_;
    for (std::size_t i = 0; i < rebuilt->size() && i < cert_.x.size(); ++i)
      if ((*rebuilt)[i] != cert_.x[i].entries())
        fail("stored x_" + std::to_string(i) + " differs from the replayed construction");

    check_sums();
    return result_;
  }

 private:
  VerifyResult fail(const std::string& message) {
    result_.ok = false;
    result_.diagnostics.push_back(message);
    return result_;
  }

  std::optional<std::vector<Entries>> replay_lemma() {
    const auto& d = *cert_.lemma;
    const std::size_t r = cert_.r, level = cert_.level, k = cert_.k;
    std::vector<Coord> w = d.witness.body;
    w.insert(w.end(), d.witness.tail.begin(), d.witness.tail.end());
    auto inside = [&](Coord a) { return std::find(w.begin(), w.end(), a) != w.end(); };
    if (d.a.size() != 2 * level || d.tail_part.size() != r - k || d.b.size() != cert_.size) {
      fail("lemma sets have the wrong sizes");
      return std::nullopt;
    }
    std::vector<Entries> xs;
    for (std::size_t i = 0; i < d.b.size(); ++i) {
      if (d.b[i].size() != k - level) {
        fail("b_" + std::to_string(i) + " has the wrong size");
        return std::nullopt;
      }
      Entries e;
      for (Coord a : d.a) e[a] = 1;
      for (Coord a : d.b[i]) e[a] = 2;
      for (Coord a : d.tail_part) e[a] = 2;
      if (e.size() != r + level) {
        fail("a, b_" + std::to_string(i) + " and the tail part overlap");
        return std::nullopt;
      }
      for (const auto& [coord, value] : e)
        if (!inside(coord)) fail("coordinate " + std::to_string(coord) + " lies outside W");
      xs.push_back(std::move(e));
    }
    return xs;
  }

  std::optional<std::vector<Entries>> replay_pipeline() {
    const auto& d = *cert_.pipeline;
    const std::size_t r = cert_.r, level = cert_.level, k = cert_.k;
    const auto& seqs = d.family.sequences;
    const std::size_t m = d.family.m;
    if (!d.colourings.world || seqs.size() != r || m != cert_.size) {
      fail("pipeline family does not match the certificate header");
      return std::nullopt;
    }
    const EmbeddedWorld& w = *d.colourings.world;
    for (std::size_t l = 0; l < r; ++l) {
      if (seqs[l].size() != m + 1) {
        fail("sequence " + std::to_string(l) + " has the wrong length");
        return std::nullopt;
      }
      for (Coord a : seqs[l])
        if (!w.contains(a)) {
          fail("coordinate " + std::to_string(a) + " lies outside W");
          return std::nullopt;
        }
    }
    // δ^l_i read off the embedding: where α^l_i leaves the limit.
    std::vector<std::vector<std::size_t>> delta(r, std::vector<std::size_t>(m));
    for (std::size_t l = 0; l < r; ++l)
      for (std::size_t i = 0; i < m; ++i) {
        const BitSeq& a = w.image(seqs[l][i]);
        delta[l][i] = first_difference(a, w.image(seqs[l][m]));
        for (std::size_t j = i + 1; j < m; ++j)
          if (first_difference(a, w.image(seqs[l][j])) != delta[l][i])
            fail("sequence " + std::to_string(l) + " is not convergent at " + std::to_string(i));
      }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        for (std::size_t l = level; l < k; ++l)
          if (!(delta[l][j] > delta[k - 1][i]))
            fail("candidate condition fails for x_" + std::to_string(i) + "+x_" +
                 std::to_string(j) + " at block " + std::to_string(l));
    if (d.candidate_colours.size() != r + 1 || d.candidate_colours[level] != cert_.colour ||
        d.candidate_colours[k] != cert_.colour)
      fail("candidate colours do not support the claimed colour");

    std::vector<Entries> xs;
    for (std::size_t i = 0; i < m; ++i) {
      Entries e;
      for (std::size_t l = 0; l < level; ++l) e[seqs[l][0]] = 1, e[seqs[l][m]] = 1;
      for (std::size_t l = level; l < k; ++l) e[seqs[l][i]] = 2;
      for (std::size_t l = k; l < r; ++l) e[seqs[l][m]] = 2;
      xs.push_back(std::move(e));
    }
    return xs;
  }

  void check_sums() {
    const std::size_t n = cert_.x.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        const std::string name = "x_" + std::to_string(i) + "+x_" + std::to_string(j);
        Entries s = plus(cert_.x[i].entries(), cert_.x[j].entries());
        const std::size_t want = i == j ? cert_.level : cert_.k;
        if (!has_shape(s, cert_.r, want))
          fail(name + " is not s_" + std::to_string(want) + " applied to its support");
        Colour got = 0;
        try {
          got = c_(GroupElement(s));
        } catch (const Error& e) {
          fail(name + " cannot be coloured: " + e.what());
          continue;
        }
        if (got != cert_.colour)
          fail("c(" + name + ") = " + std::to_string(got) + ", claimed " +
               std::to_string(cert_.colour));
      }
  }

  const PointColouring& c_;
  const ExtractionCertificate& cert_;
  VerifyResult result_;
};

}  // namespace

VerifyResult verify_certificate(const PointColouring& c, const ExtractionCertificate& cert) {
  return Replay(c, cert).run();
}

}  // namespace sumset
