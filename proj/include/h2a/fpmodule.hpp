#pragma once

// Finitely presented modules over Z or Z/n and their homomorphisms.
//
// A module is presented by a generator count and a relations matrix whose
// columns are relators. A homomorphism src -> dst is a matrix acting on
// generator coordinates, well defined when it maps relators into the span of
// dst's relators; two matrices describe the same homomorphism when they agree
// modulo dst's relations. Kernels, cokernels, images and Hom-modules are
// returned in canonical form (diagonal invariant-factor presentation) together
// with the comparison maps.

#include <optional>
#include <string>
#include <vector>

#include "h2a/ring.hpp"
#include "h2a/snf.hpp"

namespace h2a {

struct FpModule {
  Ring ring;
  index_t gens = 0;
  IMat relations;  // gens x r

  static FpModule presented(Ring ring, index_t gens, IMat relations) {
    require_input(relations.rows() == gens, "relations matrix height must equal generator count");
    return FpModule{ring, gens, ring.reduce(relations)};
  }
  static FpModule free_module(Ring ring, index_t gens) {
    return FpModule{ring, gens, IMat(gens, 0)};
  }
  static FpModule zero_module(Ring ring) { return free_module(ring, 0); }
  // One generator killed by d (d = 0 meaning no relation).
  static FpModule cyclic(Ring ring, const Int& d) {
    if (d == 0) return free_module(ring, 1);
    IMat r(1, 1);
    r(0, 0) = d;
    return presented(ring, 1, r);
  }

  bool same_shape(const FpModule& o) const {
    return ring == o.ring && gens == o.gens && imat_equal(relations, o.relations);
  }
};

struct ModuleHom {
  FpModule src, dst;
  IMat mat;  // dst.gens x src.gens

  static ModuleHom of(FpModule src, FpModule dst, IMat mat) {
    require_input(src.ring == dst.ring, "hom between modules over different rings");
    require_input(mat.rows() == dst.gens && mat.cols() == src.gens,
                  "hom matrix has wrong shape");
    return ModuleHom{std::move(src), std::move(dst), src.ring.reduce(mat)};
  }
  static ModuleHom zero(FpModule src, FpModule dst) {
    IMat z = imat_zero(dst.gens, src.gens);
    return of(std::move(src), std::move(dst), std::move(z));
  }
  static ModuleHom identity(FpModule m) {
    IMat id = imat_identity(m.gens);
    return ModuleHom{m, m, std::move(id)};
  }
};

bool well_defined(const ModuleHom& f);
bool hom_equal(const ModuleHom& f, const ModuleHom& g);
bool is_zero_hom(const ModuleHom& f);
ModuleHom compose(const ModuleHom& g, const ModuleHom& f);  // g after f
ModuleHom hom_add(const ModuleHom& f, const ModuleHom& g);
ModuleHom hom_sub(const ModuleHom& f, const ModuleHom& g);
ModuleHom hom_neg(const ModuleHom& f);

// ⊕ Z/d_i (+ free part over Z). Invariant factors satisfy d_1 | d_2 | ...;
// over Z/n each d_i divides n and a free Z/n summand is reported as d = n.
struct CanonicalForm {
  std::vector<Int> torsion;  // each > 1
  index_t free_rank = 0;     // number of Z summands; always 0 over Z/n

  bool is_zero() const { return torsion.empty() && free_rank == 0; }
  bool operator==(const CanonicalForm& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  bool operator!=(const CanonicalForm& o) const { return !(*this == o); }
  // Total number of elements; nullopt for infinite (free rank > 0).
  std::optional<Int> order() const {
    if (free_rank > 0) return std::nullopt;
    Int n = 1;
    for (auto& d : torsion) n *= d;
    return n;
  }
  std::string name() const;  // "0", "Z/2 + Z/4", "Z + Z/3", ...
};

// Canonical diagonal presentation of a module plus the comparison isos.
struct CanonicalizedModule {
  FpModule module;     // canonical presentation
  ModuleHom to_can;    // original -> canonical
  ModuleHom from_can;  // canonical -> original; to_can∘from_can = id exactly
  CanonicalForm form;
};

CanonicalForm canonical_form(const FpModule& m);
CanonicalizedModule canonicalize(const FpModule& m);
bool is_zero_module(const FpModule& m);

struct KernelData {
  CanonicalizedModule ker;
  ModuleHom incl;  // ker.module -> f.src, with f∘incl = 0
  IMat sublattice;  // f.src coordinates of the raw kernel generators
};
struct CokernelData {
  CanonicalizedModule coker;
  ModuleHom proj;  // f.dst -> coker.module, with proj∘f = 0
};
struct ImageData {
  CanonicalizedModule img;
  ModuleHom incl;  // img.module -> f.dst
  ModuleHom onto;  // f.src -> img.module, incl∘onto = f
};

KernelData kernel(const ModuleHom& f);
CokernelData cokernel(const ModuleHom& f);
ImageData image(const ModuleHom& f);

bool is_injective_hom(const ModuleHom& f);
bool is_surjective_hom(const ModuleHom& f);
bool is_iso_hom(const ModuleHom& f);

// The module of homomorphisms Hom(src, dst), with materialization maps.
struct HomModule {
  FpModule src, dst;
  CanonicalizedModule hom;  // finitely presented Hom(src, dst)
  IMat basis;               // (dst.gens·src.gens) x raw_gens matrix of vec'd homs

  ModuleHom hom_from_element(const IVec& elt) const;
  IVec element_from_hom(const ModuleHom& f) const;
};

HomModule hom_module(const FpModule& src, const FpModule& dst);

// Induced maps on Hom-modules: postcompose(g): Hom(m, X) -> Hom(m, Y) for
// g: X -> Y, and precompose(g): Hom(Y, m) -> Hom(X, m) for g: X -> Y.
ModuleHom hom_postcompose(const HomModule& from, const HomModule& to, const ModuleHom& g);
ModuleHom hom_precompose(const HomModule& from, const HomModule& to, const ModuleHom& g);

struct ModuleSum {
  FpModule sum;
  ModuleHom inj1, inj2;    // M -> M⊕N, N -> M⊕N
  ModuleHom proj1, proj2;  // M⊕N -> M, M⊕N -> N
};
ModuleSum direct_sum(const FpModule& m, const FpModule& n);

// Solve f(x) = y for x in src coordinates given y in dst coordinates, i.e.
// find a preimage modulo dst's relations; nullopt when y is not in the image.
// Columnwise for matrix arguments.
std::optional<IMat> preimage(const ModuleHom& f, const IMat& y);

// Does y lie in the span of dst relations, i.e. is it zero as an element?
bool element_is_zero(const FpModule& m, const IMat& y);

}  // namespace h2a
