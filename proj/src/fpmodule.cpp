#include "h2a/fpmodule.hpp"

namespace h2a {

namespace {

IMat drop_zero_cols(const IMat& a) {
  std::vector<index_t> keep;
  for (index_t j = 0; j < a.cols(); ++j)
    if (!imat_is_zero(a.col(j))) keep.push_back(j);
  IMat r(a.rows(), static_cast<index_t>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) r.col(j) = a.col(keep[j]);
  return r;
}

// Generators of {x : f·x ≡ 0 modulo the span of rel}, i.e. the x-part of the
// solution module of [f | rel]·(x, t) = 0 over the ring.
IMat solution_lattice(const IMat& f, const IMat& rel, const Ring& ring) {
  IMat big = kernel_basis(hcat(f, rel), ring);
  return drop_zero_cols(ring.reduce(big.topRows(f.cols())));
}

}  // namespace

bool element_is_zero(const FpModule& m, const IMat& y) {
  require_input(y.rows() == m.gens, "element has wrong coordinate count");
  return LinearSolver(m.relations, m.ring).solvable(y);
}

bool well_defined(const ModuleHom& f) {
  if (f.src.gens == 0 || f.src.relations.cols() == 0) return true;
  return LinearSolver(f.dst.relations, f.dst.ring)
      .solvable(f.src.ring.reduce(f.mat * f.src.relations));
}

bool hom_equal(const ModuleHom& f, const ModuleHom& g) {
  require_input(f.src.same_shape(g.src) && f.dst.same_shape(g.dst),
                "hom comparison across different modules");
  return LinearSolver(f.dst.relations, f.dst.ring).solvable(f.src.ring.reduce(f.mat - g.mat));
}

bool is_zero_hom(const ModuleHom& f) {
  return LinearSolver(f.dst.relations, f.dst.ring).solvable(f.mat);
}

ModuleHom compose(const ModuleHom& g, const ModuleHom& f) {
  require_input(f.dst.same_shape(g.src), "composition source/target mismatch");
  return ModuleHom::of(f.src, g.dst, g.mat * f.mat);
}

ModuleHom hom_add(const ModuleHom& f, const ModuleHom& g) {
  require_input(f.src.same_shape(g.src) && f.dst.same_shape(g.dst), "hom sum shape mismatch");
  return ModuleHom::of(f.src, f.dst, f.mat + g.mat);
}

ModuleHom hom_sub(const ModuleHom& f, const ModuleHom& g) {
  require_input(f.src.same_shape(g.src) && f.dst.same_shape(g.dst), "hom difference shape mismatch");
  return ModuleHom::of(f.src, f.dst, f.mat - g.mat);
}

ModuleHom hom_neg(const ModuleHom& f) { return ModuleHom::of(f.src, f.dst, -f.mat); }

std::string CanonicalForm::name() const {
  if (is_zero()) return "0";
  std::string s;
  for (index_t i = 0; i < free_rank; ++i) {
    if (!s.empty()) s += " + ";
    s += "Z";
  }
  for (auto& d : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + d.get_str();
  }
  return s;
}

CanonicalizedModule canonicalize(const FpModule& m) {
  SmithResult s = smith_normal_form(m.relations, m.ring);
  const index_t diag_len = std::min(m.relations.rows(), m.relations.cols());
  std::vector<index_t> kept;
  CanonicalForm form;
  std::vector<Int> can_rel_diag;  // 0 = no relation column for this generator
  for (index_t i = 0; i < m.gens; ++i) {
    Int d = i < diag_len ? s.d(i, i) : Int(0);
    if (d == 1) continue;  // trivial summand
    kept.push_back(i);
    if (m.ring.is_integers()) {
      if (d == 0) {
        ++form.free_rank;
        can_rel_diag.push_back(Int(0));
      } else {
        form.torsion.push_back(d);
        can_rel_diag.push_back(d);
      }
    } else {
      // d = 0 represents a relation by n, i.e. a free Z/n summand.
      form.torsion.push_back(d == 0 ? m.ring.n : d);
      can_rel_diag.push_back(d == 0 || d == m.ring.n ? Int(0) : d);
    }
  }

  const index_t k = static_cast<index_t>(kept.size());
  index_t rel_cols = 0;
  for (auto& d : can_rel_diag)
    if (d != 0) ++rel_cols;
  IMat can_rel = imat_zero(k, rel_cols);
  index_t col = 0;
  for (index_t i = 0; i < k; ++i)
    if (can_rel_diag[i] != 0) can_rel(i, col++) = can_rel_diag[i];

  FpModule can = FpModule::presented(m.ring, k, can_rel);
  IMat to(k, m.gens), from(m.gens, k);
  for (index_t i = 0; i < k; ++i) {
    to.row(i) = s.u.row(kept[i]);
    from.col(i) = s.u_inv.col(kept[i]);
  }
  CanonicalizedModule out{can, ModuleHom::of(m, can, to), ModuleHom::of(can, m, from), form};
  return out;
}

CanonicalForm canonical_form(const FpModule& m) { return canonicalize(m).form; }

bool is_zero_module(const FpModule& m) { return canonical_form(m).is_zero(); }

KernelData kernel(const ModuleHom& f) {
  // x with f(x) = 0 in dst: the solution lattice of f modulo dst relations,
  // presented with all relations that hold between those generators in src.
  IMat p = solution_lattice(f.mat, f.dst.relations, f.src.ring);
  IMat raw_rel = solution_lattice(p, f.src.relations, f.src.ring);
  FpModule raw = FpModule::presented(f.src.ring, p.cols(), raw_rel);
  CanonicalizedModule can = canonicalize(raw);
  ModuleHom incl = ModuleHom::of(can.module, f.src, p * can.from_can.mat);
  return KernelData{can, incl, p};
}

CokernelData cokernel(const ModuleHom& f) {
  FpModule raw = FpModule::presented(f.dst.ring, f.dst.gens, hcat(f.mat, f.dst.relations));
  CanonicalizedModule can = canonicalize(raw);
  ModuleHom proj = ModuleHom::of(f.dst, can.module, can.to_can.mat);
  return CokernelData{can, proj};
}

ImageData image(const ModuleHom& f) {
  // Submodule of dst generated by the columns of f together with dst's
  // relators (so that it contains, and is presented relative to, 0).
  IMat g = hcat(f.mat, f.dst.relations);
  IMat raw_rel = solution_lattice(g, f.dst.relations, f.dst.ring);
  FpModule raw = FpModule::presented(f.dst.ring, g.cols(), raw_rel);
  CanonicalizedModule can = canonicalize(raw);
  ModuleHom incl = ModuleHom::of(can.module, f.dst, g * can.from_can.mat);
  ModuleHom onto = ModuleHom::of(f.src, can.module, can.to_can.mat.leftCols(f.src.gens));
  return ImageData{can, incl, onto};
}

bool is_injective_hom(const ModuleHom& f) { return kernel(f).ker.form.is_zero(); }

bool is_surjective_hom(const ModuleHom& f) { return cokernel(f).coker.form.is_zero(); }

bool is_iso_hom(const ModuleHom& f) { return is_injective_hom(f) && is_surjective_hom(f); }

HomModule hom_module(const FpModule& src, const FpModule& dst) {
  require_input(src.ring == dst.ring, "hom module across different rings");
  const Ring ring = src.ring;
  // vec(F) for the well-definedness constraint F·src.relations ≡ 0
  // columnwise modulo dst.relations.
  IMat constraint = kron(src.relations.transpose(), imat_identity(dst.gens));
  IMat slack = kron(imat_identity(src.relations.cols()), dst.relations);
  IMat basis = drop_zero_cols(
      ring.reduce(kernel_basis(hcat(constraint, slack), ring).topRows(dst.gens * src.gens)));
  // Relations among those generators: combinations equal to zero as homs.
  IMat raw_rel = solution_lattice(basis, kron(imat_identity(src.gens), dst.relations), ring);
  FpModule raw = FpModule::presented(ring, basis.cols(), raw_rel);
  return HomModule{src, dst, canonicalize(raw), basis};
}

ModuleHom HomModule::hom_from_element(const IVec& elt) const {
  require_input(elt.rows() == hom.module.gens, "hom element has wrong coordinate count");
  IVec raw = IVec(basis * (hom.from_can.mat * elt));
  return ModuleHom::of(src, dst, unvec(raw, dst.gens, src.gens));
}

IVec HomModule::element_from_hom(const ModuleHom& f) const {
  require_input(f.src.same_shape(src) && f.dst.same_shape(dst),
                "element_from_hom: hom endpoints mismatch");
  require_input(well_defined(f), "element_from_hom: hom is not well defined");
  IMat slack = kron(imat_identity(src.gens), dst.relations);
  auto y = solve_linear(hcat(basis, slack), vec_of(f.mat), src.ring);
  require_internal(y.has_value(), "well-defined hom missing from hom lattice");
  return IVec(src.ring.reduce(hom.to_can.mat * y->topRows(basis.cols())));
}

ModuleHom hom_postcompose(const HomModule& from, const HomModule& to, const ModuleHom& g) {
  require_input(from.dst.same_shape(g.src) && to.dst.same_shape(g.dst) &&
                    from.src.same_shape(to.src),
                "hom_postcompose endpoint mismatch");
  IMat m(to.hom.module.gens, from.hom.module.gens);
  for (index_t j = 0; j < from.hom.module.gens; ++j) {
    IVec e = IVec(imat_zero(from.hom.module.gens, 1));
    e(j) = 1;
    m.col(j) = to.element_from_hom(compose(g, from.hom_from_element(e)));
  }
  return ModuleHom::of(from.hom.module, to.hom.module, m);
}

ModuleHom hom_precompose(const HomModule& from, const HomModule& to, const ModuleHom& g) {
  require_input(from.src.same_shape(g.dst) && to.src.same_shape(g.src) &&
                    from.dst.same_shape(to.dst),
                "hom_precompose endpoint mismatch");
  IMat m(to.hom.module.gens, from.hom.module.gens);
  for (index_t j = 0; j < from.hom.module.gens; ++j) {
    IVec e = IVec(imat_zero(from.hom.module.gens, 1));
    e(j) = 1;
    m.col(j) = to.element_from_hom(compose(from.hom_from_element(e), g));
  }
  return ModuleHom::of(from.hom.module, to.hom.module, m);
}

ModuleSum direct_sum(const FpModule& m, const FpModule& n) {
  require_input(m.ring == n.ring, "direct sum across different rings");
  IMat rel = block2x2(m.relations, imat_zero(m.gens, n.relations.cols()),
                      imat_zero(n.gens, m.relations.cols()), n.relations);
  FpModule sum = FpModule::presented(m.ring, m.gens + n.gens, rel);
  IMat i1 = vcat(imat_identity(m.gens), imat_zero(n.gens, m.gens));
  IMat i2 = vcat(imat_zero(m.gens, n.gens), imat_identity(n.gens));
  return ModuleSum{sum, ModuleHom::of(m, sum, i1), ModuleHom::of(n, sum, i2),
                   ModuleHom::of(sum, m, i1.transpose()), ModuleHom::of(sum, n, i2.transpose())};
}

std::optional<IMat> preimage(const ModuleHom& f, const IMat& y) {
  require_input(y.rows() == f.dst.gens, "preimage: element has wrong coordinate count");
  auto sol = solve_linear(hcat(f.mat, f.dst.relations), y, f.src.ring);
  if (!sol) return std::nullopt;
  return f.src.ring.reduce(sol->topRows(f.src.gens));
}

}  // namespace h2a
