#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structa/core/error.hpp"
#include "structa/core/family.hpp"
#include "structa/core/finset.hpp"
#include "structa/core/law_report.hpp"
#include "structa/settools/images.hpp"

namespace structa::settools {

namespace detail {

inline bool sigma_bits(FamBits s, std::size_t n) {
  const Mask all = full_mask(n);
  if (!has(s, all)) return false;
  for (Mask a = 0; a <= all; ++a) {
    if (!has(s, a)) continue;
    if (!has(s, all & ~a)) return false;
    for (Mask b = a + 1; b <= all; ++b) {
      if (has(s, b) && !has(s, a | b)) return false;
    }
  }
  return true;
}

// Closure of `b` under complement and pairwise union, starting from b u {X}.
// On a finite carrier closure under finite unions is closure under unions of
// sequences, so this is the generated sigma-algebra.
inline FamBits sigma_iterate(FamBits b, std::size_t n, std::size_t* rounds) {
  const Mask all = full_mask(n);
  FamBits s = b | (FamBits{1} << all);
  std::size_t k = 0;
  while (true) {
    ++k;
    FamBits next = s;
    for (Mask a = 0; a <= all; ++a) {
      if (!has(s, a)) continue;
      next |= FamBits{1} << (all & ~a);
      for (Mask c = 0; c <= all; ++c) {
        if (has(s, c)) next |= FamBits{1} << (a | c);
      }
    }
    if (next == s) break;
    s = next;
  }
  if (rounds) *rounds = k;
  return s;
}

inline FamBits meet_containing(FamBits b, const std::vector<FamBits>& algebras, std::size_t subsets) {
  FamBits meet = subsets == 64 ? ~FamBits{0} : (FamBits{1} << subsets) - 1;
  for (FamBits a : algebras) {
    if ((b & ~a) == 0) meet &= a;
  }
  return meet;
}

}  // namespace detail

inline bool is_sigma_algebra(const Family& f) { return detail::sigma_bits(detail::fam_bits(f), f.carrier().size()); }

struct SigmaClosure {
  Family algebra;
  std::size_t rounds = 0;  // closure passes until the fixpoint was observed
};

inline SigmaClosure sigma_closure(const Family& b, std::size_t guard = 4) {
  if (b.carrier().size() > guard || b.carrier().size() > kMaxBitsCarrier) {
    throw Error(Errc::TooLarge, "sigma generation guard exceeded", std::to_string(b.carrier().size()));
  }
  SigmaClosure out;
  out.algebra = detail::from_bits(b.carrier(), detail::sigma_iterate(detail::fam_bits(b), b.carrier().size(), &out.rounds));
  return out;
}

inline Family sigma_generate(const FinSet& carrier, const Family& b, std::size_t guard = 4) {
  if (b.carrier() != carrier) throw Error(Errc::CarrierMismatch, "generators are not over the carrier");
  return sigma_closure(b, guard).algebra;
}

// Every sigma-algebra on `carrier`, found by testing each of the 2^(2^n)
// families (n <= 4).
inline std::vector<Family> all_sigma_algebras(const FinSet& carrier) {
  if (carrier.size() > 4) throw Error(Errc::TooLarge, "sigma-algebra enumeration limited to 4 points");
  const std::size_t n = carrier.size();
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Family> out;
  for (FamBits s = 0; s < (FamBits{1} << subsets); ++s) {
    if (detail::sigma_bits(s, n)) out.push_back(detail::from_bits(carrier, s));
  }
  return out;
}

// n Sigma(B): the intersection of every sigma-algebra containing B.
inline Family sigma_by_intersection(const Family& b, const std::vector<Family>& algebras) {
  std::vector<FamBits> bits;
  for (const auto& a : algebras) bits.push_back(detail::fam_bits(a));
  return detail::from_bits(b.carrier(),
                           detail::meet_containing(detail::fam_bits(b), bits, std::size_t{1} << b.carrier().size()));
}

// For every family B on the carrier: the closure is a sigma-algebra containing
// B, is a fixpoint, terminates within |P(P(X))| passes, and equals n Sigma(B).
inline LawReport sigma_laws(const FinSet& carrier) {
  LawReport r("sigma");
  const std::size_t n = carrier.size();
  std::vector<FamBits> algebras;
  for (const auto& a : all_sigma_algebras(carrier)) algebras.push_back(detail::fam_bits(a));
  const std::size_t subsets = std::size_t{1} << n;
  for (FamBits bb = 0; bb < (FamBits{1} << subsets); ++bb) {
    std::size_t rounds = 0;
    const FamBits s = detail::sigma_iterate(bb, n, &rounds);
    auto wit = [&] { return to_string(detail::from_bits(carrier, bb)); };
    r.record_lazy("sigma.is_algebra", "the closure is a sigma-algebra", detail::sigma_bits(s, n), wit);
    r.record_lazy("sigma.contains_generators", "B <= sigma(B)", (bb & ~s) == 0, wit);
    r.record_lazy("sigma.fixpoint", "sigma(sigma(B)) = sigma(B)", detail::sigma_iterate(s, n, nullptr) == s, wit);
    r.record_lazy("sigma.terminates", "closure settles within |P(P(X))| passes",
                  rounds <= (std::size_t{1} << subsets), wit);
    r.record_lazy("sigma.intersection", "sigma(B) = n Sigma(B)",
                  detail::meet_containing(bb, algebras, subsets) == s, wit);
  }
  return r;
}

}  // namespace structa::settools
