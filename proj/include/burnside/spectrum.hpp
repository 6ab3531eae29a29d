#pragma once

#include "burnside/ring.hpp"

namespace burnside {

// Labels a prime ideal: a slice (or section) class together with a
// characteristic (0 or a prime p). For p > 0 the class must satisfy
// |N_G(T,S)/S| coprime to p.
struct PrimeIdealLabel {
  int cls = -1;
  int p = 0;
};

// One Sylow-extension step (PT, PS), with the second component normally
// closed in section mode.
Slice plus_p(const RingContext& ctx, const Slice& sl, int p,
             bool section_mode);

// Iterated fixpoint of plus_p; lands in Pi_p(G) (resp. Sigma_p(G)).
Slice hat_p(const RingContext& ctx, const Slice& sl, int p, bool section_mode);
int hat_p_class(const RingContext& ctx, int cls, int p, bool section_mode);

bool label_valid(const RingContext& ctx, const PrimeIdealLabel& a,
                 RingTag tag);

// I_{b} contained in I_{a}: equal characteristic forces conjugate
// classes; characteristic 0 into p > 0 goes through the hat-p closure.
bool ideal_contains(const RingContext& ctx, const PrimeIdealLabel& a,
                    const PrimeIdealLabel& b, RingTag tag);

struct SpectrumComponent {
  std::vector<int> classes;        // member class ids, ascending
  int label_subgroup_class = -1;   // perfect-subgroup class (section ring
                                   // over Z), -1 otherwise
  QRingElement idempotent;
};

// Connected components of the spectrum: localization p = 0 means all
// primes (Spec over Z), p > 0 a single prime (over Z_(p)).
std::vector<SpectrumComponent> spectrum_components(const RingContext& ctx,
                                                   RingTag tag, int p = 0);

// Is sum of the idempotents over F in Z_(pi) Xi(G) (resp. Gamma)?
// Checked combinatorially: F closed under (T,S) -> (PT,PS) and its
// preimages for all p-subgroups P of the pair normalizer, p in pi.
// in_f is indexed by slice class ids (slice ring) or positions in
// section_classes() (section ring).
bool idempotent_support_check(const RingContext& ctx,
                              const std::vector<char>& in_f,
                              const std::vector<int>& primes, RingTag tag);

}  // namespace burnside
