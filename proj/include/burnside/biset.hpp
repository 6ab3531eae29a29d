#pragma once

#include "burnside/gset.hpp"

namespace burnside {

// (H,G)-biset: commuting left H-action and right G-action on a finite set.
struct Biset {
  const Group* H = nullptr;
  const Group* G = nullptr;
  int size = 0;
  std::vector<int> lact;  // lact[h*size + u]
  std::vector<int> ract;  // ract[u*|G| + g]

  int l(int h, int u) const { return lact[size_t(h) * size + u]; }
  int r(int u, int g) const { return ract[size_t(u) * G->order() + g]; }
  void validate() const;
};

// Constructors take the exact Group objects the two ring contexts own,
// plus the element maps relating them.
Biset identity_biset(const Group& g);
// H <= G acting on U = G by left multiplication through the embedding.
Biset restriction_biset(const Group& g, const Group& h,
                        const std::vector<int>& embed);
// U = G as a (G,H)-biset.
Biset induction_biset(const Group& g, const Group& h,
                      const std::vector<int>& embed);
// U = G/N as a (G, G/N)-biset; proj maps G onto the quotient.
Biset inflation_biset(const Group& g, const Group& q,
                      const std::vector<int>& proj);
// U = G/N as a (G/N, G)-biset.
Biset deflation_biset(const Group& g, const Group& q,
                      const std::vector<int>& proj);
// U = H with right action through an isomorphism G -> H (element map).
Biset isomorphism_biset(const Group& g, const Group& h,
                        const std::vector<int>& iso);
// (H x H', G x G')-biset U x U' over product groups built with
// direct_product's index convention.
Biset product_biset(const Group& hprod, const Group& gprod, const Biset& a,
                    const Biset& b);

Biset disjoint_union_biset(const Biset& a, const Biset& b);
// V x_H U for a (K,H)-biset V and an (H,G)-biset U.
Biset compose_bisets(const Biset& v, const Biset& u);

// H preserves every right G-orbit.
bool is_left_inert(const Biset& u);

// Linear biset operation on ring elements:
// U x_G <T,S> = sum over [H\U/S] of <^uT, ^uS>.
RingElement biset_apply(const RingContext& hc, const RingContext& gc,
                        const Biset& u, const RingElement& x);

// Explicit quotient (U x X)/(ug,x)~(u,gx) with the induced morphism;
// the oracle for biset_apply.
GMorphism u_times_g(const Biset& u, const GMorphism& f);

// T_U(X) = Hom_{G-set}(U^op, X) as an H-set, realized on tuples of
// fixed points over right-orbit representatives. Works for arbitrary
// bisets (the appendix counterexample needs a non-left-inert one).
GSet hom_functor(const Biset& u, const GSet& x, size_t guard = 2000000);
GMorphism hom_functor(const Biset& u, const GMorphism& f,
                      size_t guard = 2000000);

// Generalized tensor induction; refuses bisets that are not left inert
// (the operation is not well defined on the ring there). Elements with
// a representing morphism go through the fixed-point functor; virtual
// elements are transported multiplicatively on marks and pulled back.
RingElement tensor_induction(const RingContext& hc, const RingContext& gc,
                             const Biset& u, const RingElement& x);

}  // namespace burnside
