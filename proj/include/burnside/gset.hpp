#pragma once

#include <random>

#include "burnside/ring.hpp"

namespace burnside {

// Explicit finite G-set: action table (group element, point) -> point.
struct GSet {
  const Group* G = nullptr;
  int size = 0;
  std::vector<int> act;  // act[g*size + x]

  int a(int g, int x) const { return act[size_t(g) * size + x]; }
  void validate() const;

  std::vector<int> orbit_reps() const;
  std::vector<int> orbit_of(int x) const;
  ElemSet stabilizer(int x) const;
  // Fixed points of a subgroup.
  std::vector<int> fixed_points(const ElemSet& members) const;
};

GSet trivial_gset(const Group& g, int npoints = 1);
GSet coset_gset(const RingContext& ctx, int s, std::vector<int>* reps = nullptr);

// Equivariant map between explicit finite G-sets.
struct GMorphism {
  GSet dom;
  GSet cod;
  std::vector<int> map;

  void validate() const;
};

// A morphism in the category of G-set morphisms: two equivariant legs
// making the square commute (beta o top = bottom o alpha).
struct MorphismSquare {
  GMorphism top;
  GMorphism bottom;
  std::vector<int> alpha;  // dom(top) -> dom(bottom)
  std::vector<int> beta;   // cod(top) -> cod(bottom)

  void validate() const;
};

// Projection G/S -> G/T; requires S <= T.
GMorphism transitive_projection(const RingContext& ctx, int t, int s);

// Orbit-by-orbit sum of <stabilizer of f(x), stabilizer of x>.
RingElement linearize(const RingContext& ctx, const GMorphism& f);

// Number of commuting squares from the projection G/S -> G/T into f,
// counted by enumerating equivariant leg pairs through their base-point
// images and checking commutation pointwise.
long hom_count(const RingContext& ctx, int t, int s, const GMorphism& f);

GMorphism product_morphism(const GMorphism& f, const GMorphism& g);
GMorphism coproduct_morphism(const GMorphism& f, const GMorphism& g);

// f with codomain cut down to its image.
GMorphism restrict_to_image(const GMorphism& f);
// f restricted to a G-stable set of domain points, codomain its image.
GMorphism restrict_to_subdomain(const GMorphism& f,
                                const std::vector<int>& dom_points);

struct PullbackSquare {
  GSet apex;               // {(y,z) : c(y) = d(z)}
  GMorphism to_cod_of_c;   // apex -> dom(c)  (the leg opposite d)
  GMorphism to_cod_of_d;   // apex -> dom(d)
};
PullbackSquare pullback(const GMorphism& c, const GMorphism& d);

// Constant fiber stabilizers; cross-checked internally against the
// normal-fiber criterion.
bool is_galois(const GMorphism& f);

struct GaloisClosure {
  GMorphism closed;
  std::vector<int> proj;  // domain point -> closed domain point
};
GaloisClosure galois_closure(const GMorphism& f);

// All equivariant maps dom -> cod (via orbit representative images);
// throws when the count would exceed the guard.
std::vector<std::vector<int>> equivariant_maps(const GSet& dom,
                                               const GSet& cod,
                                               size_t guard = 200000);

// Random morphism: 1-3 codomain orbits, 1-4 domain orbits with random
// subgroups and random equivariant fiber maps. A positive max_points
// bounds the domain size (orbit subgroups are drawn from those of small
// enough index).
GMorphism random_morphism(const RingContext& ctx, std::mt19937_64& rng,
                          int max_dom_orbits = 4, int max_points = 0);

}  // namespace burnside
