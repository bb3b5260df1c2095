#include "schur/sring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "schur/errors.hpp"
#include "schur/parallel.hpp"

namespace schur {
namespace {

unsigned resolve(unsigned threads) { return threads == 0 ? default_threads() : threads; }

std::string describe(const std::vector<std::uint32_t>& xs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < xs.size() && i < 8; ++i) out << (i ? "," : "") << xs[i];
  if (xs.size() > 8) out << ",...";
  out << '}';
  return out.str();
}

// Renumbers colors by first occurrence so that ids are deterministic.
std::uint32_t renumber(std::vector<std::uint32_t>& colors) {
  std::map<std::uint32_t, std::uint32_t> ids;
  for (auto& c : colors) c = ids.emplace(c, static_cast<std::uint32_t>(ids.size())).first->second;
  return static_cast<std::uint32_t>(ids.size());
}

// Assigns new colors to equal signatures.
template <class Sig>
std::uint32_t assign(const std::vector<Sig>& sigs, std::vector<std::uint32_t>& colors) {
  std::map<Sig, std::uint32_t> ids;
  for (std::size_t x = 0; x < sigs.size(); ++x) {
    colors[x] = ids.emplace(sigs[x], static_cast<std::uint32_t>(ids.size())).first->second;
  }
  return static_cast<std::uint32_t>(ids.size());
}

Partition partition_from_colors(const std::vector<std::uint32_t>& colors, std::uint32_t count) {
  Partition blocks(count);
  for (std::uint32_t x = 0; x < colors.size(); ++x) blocks[colors[x]].push_back(x);
  return canonical_partition(std::move(blocks));
}

PrimeSet complement(const CGRing& R, const PrimeSet& Q) {
  PrimeSet out;
  for (auto p : R.prime_set()) {
    if (!std::binary_search(Q.begin(), Q.end(), p)) out.push_back(p);
  }
  return out;
}

}  // namespace

SRing::SRing(RingPtr ring, Partition classes) : ring_(std::move(ring)), classes_(std::move(classes)) {
  class_of_.assign(ring_->size(), 0);
  class_sets_.reserve(classes_.size());
  for (std::uint32_t i = 0; i < classes_.size(); ++i) {
    for (auto x : classes_[i]) class_of_[x] = i;
    class_sets_.push_back(ring_->make_set(classes_[i]));
  }
}

SRing SRing::from_partition(RingPtr ring, Partition classes) {
  std::vector<bool> seen(ring->size(), false);
  std::size_t covered = 0;
  for (const auto& block : classes) {
    if (block.empty()) throw InvalidArgument("partition has an empty class");
    for (auto x : block) {
      if (x >= ring->size()) throw InvalidArgument("element index " + std::to_string(x) + " out of range");
      if (seen[x]) throw InvalidArgument("element " + std::to_string(x) + " occurs in two classes");
      seen[x] = true;
      ++covered;
    }
  }
  if (covered != ring->size()) throw InvalidArgument("classes do not cover the ring");
  return SRing(std::move(ring), canonical_partition(std::move(classes)));
}

SRing SRing::verified(RingPtr ring, Partition classes) {
  SRing A = from_partition(std::move(ring), std::move(classes));
  const auto report = verify_sring(A.ring(), A.classes());
  if (!report.ok) {
    const auto& v = report.violations.front();
    throw InvalidArgument("not an S-ring: " + v.axiom + " axiom fails: " + v.witness);
  }
  return A;
}

bool SRing::is_a_set(const ElementSet& X) const {
  bool ok = true;
  std::vector<bool> checked(classes_.size(), false);
  X.for_each([&](std::uint32_t x) {
    const auto c = class_of_[x];
    if (!ok || checked[c]) return;
    checked[c] = true;
    ok = class_sets_[c].is_subset_of(X);
  });
  return ok;
}

VerifyReport verify_sring(const RingPtr& ring, const Partition& classes, unsigned threads) {
  VerifyReport report;
  auto fail = [&](std::string axiom, std::string witness) {
    report.ok = false;
    report.violations.push_back({std::move(axiom), std::move(witness)});
  };
  std::optional<SRing> parsed;
  try {
    parsed = SRing::from_partition(ring, classes);
  } catch (const InvalidArgument& e) {
    fail("partition", e.what());
    return report;
  }
  const SRing& A = *parsed;
  const CGRing& R = *ring;
  const auto& c = A.class_index();

  if (A.classes()[0].size() != 1) fail("zero", "class of 0 is " + describe(A.classes()[0]));

  for (std::uint32_t i = 0; i < A.rank(); ++i) {
    const auto& X = A.classes()[i];
    const auto target = c[R.neg(X[0])];
    const bool closed = std::all_of(X.begin(), X.end(), [&](std::uint32_t x) { return c[R.neg(x)] == target; });
    if (!closed || A.classes()[target].size() != X.size()) {
      fail("negation", "-X is not a class for X = " + describe(X));
      break;
    }
  }

  for (auto u : R.unit_generators()) {
    bool ok = true;
    for (std::uint32_t i = 0; i < A.rank() && ok; ++i) {
      const auto& X = A.classes()[i];
      const auto target = c[R.mul(u, X[0])];
      for (auto x : X) {
        if (c[R.mul(u, x)] != target) {
          fail("unit", "uX is not a class for u = " + std::to_string(u) + ", X = " + describe(X));
          ok = false;
          break;
        }
      }
    }
    if (!ok) break;
  }

  // For each class X, the vector (|{x in X : z - x in Y}|)_Y must be the same
  // for all z in a class Z.
  const std::size_t rank = A.rank();
  std::vector<std::string> witnesses(rank);
  parallel_for(rank, resolve(threads), [&](std::size_t i) {
    const auto& X = A.classes()[i];
    std::vector<std::uint32_t> rep(rank), cur(rank);
    for (std::size_t k = 0; k < rank; ++k) {
      const auto& Z = A.classes()[k];
      std::fill(rep.begin(), rep.end(), 0);
      for (auto x : X) ++rep[c[R.sub(Z[0], x)]];
      for (std::size_t j = 1; j < Z.size(); ++j) {
        std::fill(cur.begin(), cur.end(), 0);
        for (auto x : X) ++cur[c[R.sub(Z[j], x)]];
        if (cur != rep) {
          std::size_t y = 0;
          while (cur[y] == rep[y]) ++y;
          std::ostringstream out;
          out << "X = " << describe(X) << ", Y = " << describe(A.classes()[y]) << ": multiplicity "
              << rep[y] << " at z = " << Z[0] << " but " << cur[y] << " at z = " << Z[j];
          witnesses[i] = out.str();
          return;
        }
      }
    }
  });
  for (auto& w : witnesses) {
    if (!w.empty()) {
      fail("convolution", w);
      break;
    }
  }
  return report;
}

SRing cyclotomic(const UnitSubgroup& K) { return SRing::from_partition(K.ring(), unit_orbit_partition(K)); }

SRing schur_closure(const RingPtr& ring, const std::vector<ElementSet>& seeds, unsigned threads) {
  const CGRing& R = *ring;
  const std::uint32_t n = R.size();
  std::vector<std::uint32_t> colors(n);
  {
    std::vector<std::vector<bool>> sigs(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      sigs[x].push_back(x == 0);
      for (const auto& s : seeds) sigs[x].push_back(s.contains(x));
    }
    assign(sigs, colors);
  }
  std::uint32_t count = renumber(colors);
  const auto& gens = R.unit_generators();
  while (true) {
    const std::uint32_t before = count;

    std::vector<std::vector<std::uint64_t>> conv(n);
    parallel_for(n, resolve(threads), [&](std::size_t z) {
      auto& sig = conv[z];
      sig.reserve(n + 1);
      for (std::uint32_t x = 0; x < n; ++x) {
        sig.push_back(std::uint64_t{colors[x]} * count + colors[R.sub(static_cast<std::uint32_t>(z), x)]);
      }
      std::sort(sig.begin(), sig.end());
      sig.push_back(colors[z]);
    });
    count = assign(conv, colors);

    std::vector<std::vector<std::uint32_t>> sym(n);
    for (std::uint32_t x = 0; x < n; ++x) {
      sym[x].push_back(colors[x]);
      sym[x].push_back(colors[R.neg(x)]);
      for (auto u : gens) sym[x].push_back(colors[R.mul(u, x)]);
    }
    count = assign(sym, colors);
    count = renumber(colors);
    if (count == before) break;
  }
  return SRing::from_partition(ring, partition_from_colors(colors, count));
}

std::vector<Ideal> a_ideals(const SRing& A) {
  std::vector<Ideal> out;
  for (auto I : A.ring()->ideals()) {
    if (A.is_a_ideal(I)) out.push_back(I);
  }
  return out;
}

bool is_dense(const SRing& A) { return a_ideals(A).size() == A.ring()->ideals().size(); }

Ideal IL_of(const SRing& A) { return A.ring()->IL(A.class_set(A.class_of(A.ring()->one()))); }

bool is_pure(const SRing& A) { return IL_of(A) == A.ring()->zero_ideal(); }

SRing restrict_to(const SRing& A, Ideal I) {
  const CGRing& R = *A.ring();
  if (!R.is_ideal(I) || !A.is_a_ideal(I)) throw InvalidArgument(std::to_string(I.m) + "R is not an A-ideal");
  const auto ri = R.ideal_ring(I.m);
  Partition blocks;
  for (const auto& X : A.classes()) {
    if (!R.contains(I, X[0])) continue;
    std::vector<std::uint32_t> image;
    for (auto x : X) image.push_back(ri.from_ideal[x]);
    blocks.push_back(std::move(image));
  }
  return SRing::from_partition(ri.ring, std::move(blocks));
}

SRing quotient_sring(const SRing& A, Ideal J) {
  const CGRing& R = *A.ring();
  if (!R.is_ideal(J) || !A.is_a_ideal(J)) throw InvalidArgument(std::to_string(J.m) + "R is not an A-ideal");
  const auto q = R.quotient(J);
  std::vector<std::int64_t> owner(q.ring->size(), -1);
  Partition blocks;
  for (const auto& X : A.classes()) {
    ElementSet image(q.ring->size());
    for (auto x : X) image.insert(q.map[x]);
    const auto first = image.first();
    if (owner[first] >= 0) {
      if (q.ring->make_set(blocks[owner[first]]) != image) {
        throw Falsification("images of classes in R/J overlap without coinciding");
      }
      continue;
    }
    bool clash = false;
    image.for_each([&](std::uint32_t y) { clash = clash || owner[y] >= 0; });
    if (clash) throw Falsification("images of classes in R/J overlap without coinciding");
    image.for_each([&](std::uint32_t y) { owner[y] = static_cast<std::int64_t>(blocks.size()); });
    blocks.push_back(image.indices());
  }
  return SRing::from_partition(q.ring, std::move(blocks));
}

SRing tensor(const SRing& A1, const SRing& A2) {
  auto comps = A1.ring()->components();
  comps.insert(comps.end(), A2.ring()->components().begin(), A2.ring()->components().end());
  const auto ring = CGRing::make(std::move(comps));
  const std::uint32_t stride = A1.ring()->size();
  Partition blocks;
  for (const auto& X1 : A1.classes()) {
    for (const auto& X2 : A2.classes()) {
      std::vector<std::uint32_t> block;
      block.reserve(X1.size() * X2.size());
      for (auto x2 : X2) {
        for (auto x1 : X1) block.push_back(x1 + stride * x2);
      }
      blocks.push_back(std::move(block));
    }
  }
  return SRing::from_partition(ring, std::move(blocks));
}

SRing tensor_over(const RingPtr& ring, const PrimeSet& Q, const SRing& AQ, const SRing& AQc) {
  const CGRing& R = *ring;
  const PrimeSet Qc = complement(R, Q);
  if (!(*AQ.ring() == *R.sub_ring(Q)) || !(*AQc.ring() == *R.sub_ring(Qc))) {
    throw InvalidArgument("factor rings do not match the components of " + R.spec());
  }
  Partition blocks;
  for (const auto& X1 : AQ.classes()) {
    for (const auto& X2 : AQc.classes()) {
      std::vector<std::uint32_t> block;
      for (auto x1 : X1) {
        const auto a = R.from_sub(x1, Q);
        for (auto x2 : X2) block.push_back(R.add(a, R.from_sub(x2, Qc)));
      }
      blocks.push_back(std::move(block));
    }
  }
  return SRing::from_partition(ring, std::move(blocks));
}

TensorSplit is_tensor_over(const SRing& A, const PrimeSet& Q) {
  const CGRing& R = *A.ring();
  TensorSplit out;
  const PrimeSet all = R.prime_set();
  if (Q.empty() || !std::includes(all.begin(), all.end(), Q.begin(), Q.end()) || Q.size() == all.size()) {
    out.reason = "Q must be a nonempty proper subset of the primes of the ring";
    return out;
  }
  const PrimeSet Qc = complement(R, Q);
  if (!A.is_a_ideal(R.component_ideal(Q)) || !A.is_a_ideal(R.component_ideal(Qc))) {
    out.reason = "R_Q or its complement is not an A-ideal";
    return out;
  }
  std::map<std::vector<std::uint32_t>, bool> fq, fc;
  for (const auto& X : A.classes()) {
    const auto set = A.ring()->make_set(X);
    const auto pq = R.project(set, Q);
    const auto pc = R.project(set, Qc);
    if (pq.size() * pc.size() != X.size()) {
      out.reason = "class " + describe(X) + " is not the product of its projections";
      return out;
    }
    std::vector<std::uint32_t> a, b;
    pq.for_each([&](std::uint32_t x) { a.push_back(R.to_sub(x, Q)); });
    pc.for_each([&](std::uint32_t x) { b.push_back(R.to_sub(x, Qc)); });
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    fq[a] = true;
    fc[b] = true;
  }
  Partition pq, pc;
  for (auto& [k, v] : fq) pq.push_back(k);
  for (auto& [k, v] : fc) pc.push_back(k);
  try {
    out.on_q = SRing::from_partition(R.sub_ring(Q), std::move(pq));
    out.on_complement = SRing::from_partition(R.sub_ring(Qc), std::move(pc));
  } catch (const InvalidArgument&) {
    out.on_q.reset();
    out.on_complement.reset();
    out.reason = "projections of classes do not form partitions";
    return out;
  }
  out.ok = true;
  return out;
}

std::vector<WreathCert> wreath_pairs(const SRing& A) {
  const CGRing& R = *A.ring();
  const auto ideals = a_ideals(A);
  std::vector<Ideal> il(A.rank());
  for (std::size_t i = 0; i < A.rank(); ++i) il[i] = R.IL(A.class_set(i));
  std::vector<WreathCert> out;
  for (auto I : ideals) {
    for (auto J : ideals) {
      if (!R.includes(I, J)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < A.rank() && ok; ++i) {
        if (R.contains(I, A.classes()[i][0])) continue;
        ok = R.includes(il[i], J);
      }
      if (ok) out.push_back({I, J, I != R.whole() && J != R.zero_ideal()});
    }
  }
  return out;
}

bool is_nontrivial_wreath(const SRing& A) {
  const auto certs = wreath_pairs(A);
  return std::any_of(certs.begin(), certs.end(), [](const WreathCert& c) { return c.nontrivial; });
}

ElementSet power_map(const RingPtr& ring, const ElementSet& X, std::uint64_t m) {
  ElementSet out(ring->size());
  X.for_each([&](std::uint32_t x) { out.insert(ring->scale(x, m)); });
  return out;
}

ElementSet frobenius_set(const RingPtr& ring, const ElementSet& X, std::uint32_t p) {
  const CGRing& R = *ring;
  const Ideal H = R.annihilator(R.make_set(std::vector<std::uint32_t>{R.scale(R.one(), p)}));
  const auto h = R.elements(H).indices();
  ElementSet out(R.size());
  X.for_each([&](std::uint32_t x) {
    std::uint64_t hits = 0;
    for (auto g : h) hits += X.contains(R.add(x, g));
    if (hits % p != 0) out.insert(R.scale(x, p));
  });
  return out;
}

bool is_rational(const SRing& A, const PrimeSet& Q) {
  const CGRing& R = *A.ring();
  for (auto p : Q) {
    const auto k = R.component_of(p);
    if (!k) throw InvalidArgument(std::to_string(p) + " is not a prime of " + R.spec());
    const auto single = CGRing::make({R.components()[*k]});
    for (auto g : single->unit_generators()) {
      const auto u = R.embed_unit(*k, g);
      for (std::uint32_t x = 0; x < R.size(); ++x) {
        if (A.class_of(R.mul(u, x)) != A.class_of(x)) return false;
      }
    }
  }
  return true;
}

std::uint64_t coset_count(const SRing& A, Ideal H, const ElementSet& X) {
  const CGRing& R = *A.ring();
  if (!R.is_ideal(H) || !A.is_a_ideal(H)) throw InvalidArgument(std::to_string(H.m) + "R is not an A-ideal");
  if (X.empty()) throw EmptySet("coset_count of the empty set");
  const auto h = R.elements(H).indices();
  std::optional<std::uint64_t> value;
  X.for_each([&](std::uint32_t x) {
    std::uint64_t hits = 0;
    for (auto g : h) hits += X.contains(R.add(x, g));
    if (value && *value != hits) throw Falsification("|X cap (x + H)| is not constant on X");
    value = hits;
  });
  return *value;
}

}  // namespace schur
