#include "evatop/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace evatop {

Chain boundary_of(const Simplex& q, uint64_t p) {
  if (q.dim() < 1)
    throw std::invalid_argument(
        "boundary_of: degree underflow on a 0-simplex (use the augmentation)");
  Chain out;
  out.p = p;
  out.degree = q.dim() - 1;
  auto verts = q.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::vector<VertexId> face;
    face.reserve(verts.size() - 1);
    for (std::size_t j = 0; j < verts.size(); ++j)
      if (j != i) face.push_back(verts[j]);
    uint64_t coeff = (i % 2 == 0) ? 1 % p : (p - 1) % p;
    if (coeff) out.terms.emplace(Simplex(std::move(face)), coeff);
  }
  return out;
}

FpMatrix boundary_matrix(const Complex& c, int n, uint64_t p) {
  if (n < 0) throw std::invalid_argument("boundary_matrix: negative degree");
  std::vector<Simplex> cols = c.simplices_of_dim(n);
  if (n == 0) return FpMatrix(0, cols.size(), p);
  std::vector<Simplex> rows = c.simplices_of_dim(n - 1);
  std::unordered_map<Simplex, std::size_t, SimplexHash> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
  FpMatrix d(rows.size(), cols.size(), p);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Chain b = boundary_of(cols[j], p);
    for (const auto& [face, coeff] : b.terms)
      d.set(row_of.at(face), j, coeff);
  }
  return d;
}

std::string HomologyProfile::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  if (empty_complex)
    j["empty_complex"] = true;
  else
    j["reduced_dims"] = dims;
  return j.dump();
}

HomologyProfile reduced_homology_dims(const Complex& c, uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("reduced_homology_dims: p must be prime");
  HomologyProfile out;
  out.p = p;
  if (c.empty()) {
    out.empty_complex = true;
    return out;
  }
  int m = c.dim();
  std::vector<std::size_t> rank_d(m + 2, 0), count(m + 1, 0);
  for (int n = 0; n <= m; ++n) count[n] = c.count_of_dim(n);
  for (int n = 1; n <= m; ++n) rank_d[n] = boundary_matrix(c, n, p).rank();
  out.dims.resize(m + 1);
  // degree 0 uses the augmentation (rank 1 on a nonempty complex)
  out.dims[0] = count[0] - 1 - rank_d[1];
  for (int n = 1; n <= m; ++n)
    out.dims[n] = (count[n] - rank_d[n]) - rank_d[n + 1];
  while (!out.dims.empty() && out.dims.back() == 0) out.dims.pop_back();
  return out;
}

bool is_acyclic(const Complex& c, uint64_t p) {
  if (c.empty()) return false;
  return reduced_homology_dims(c, p).dims.empty();
}

uint64_t restriction_sign(const Permutation& f, const Simplex& q, uint64_t p) {
  std::vector<VertexId> img;
  img.reserve(q.card());
  for (VertexId v : q.vertices()) img.push_back(f(v));
  std::size_t inversions = 0;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++inversions;
  return (inversions % 2 == 0) ? 1 % p : (p - 1) % p;
}

FpMatrix chain_map_matrix(const Permutation& f, const Complex& src,
                          const Complex& dst, int n, uint64_t p) {
  if (src.size() != dst.size())
    throw std::invalid_argument(
        "chain_map_matrix: not an isomorphism (size mismatch)");
  bool ok = true;
  src.for_each([&](const Simplex& s) {
    for (VertexId v : s.vertices())
      if (!f.in_domain(v)) ok = false;
    if (ok && !dst.contains(f.apply(s))) ok = false;
  });
  if (!ok)
    throw std::invalid_argument(
        "chain_map_matrix: f does not induce a simplicial isomorphism");
  std::vector<Simplex> cols = src.simplices_of_dim(n);
  std::vector<Simplex> rows = dst.simplices_of_dim(n);
  std::unordered_map<Simplex, std::size_t, SimplexHash> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
  FpMatrix m(rows.size(), cols.size(), p);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Simplex image = f.apply(cols[j]);
    m.set(row_of.at(image), j, restriction_sign(f, cols[j], p));
  }
  return m;
}

uint64_t lefschetz_sum(const Permutation& f, const Complex& c, uint64_t p) {
  uint64_t acc = 0;
  for (int n = 0; n <= c.dim(); ++n) {
    uint64_t tr = chain_map_matrix(f, c, c, n, p).trace();
    acc = (n % 2 == 0) ? fp_add(acc, tr, p) : fp_sub(acc, tr, p);
  }
  return acc;
}

bool ChainComplexFp::boundary_squares_to_zero() const {
  for (std::size_t n = 2; n < d.size(); ++n)
    if (!d[n - 1].multiply(d[n]).is_zero()) return false;
  return true;
}

ChainComplexFp chain_complex_of(const Complex& c, uint64_t p,
                                std::size_t min_degrees) {
  ChainComplexFp out;
  out.p = p;
  std::size_t degrees = std::max<std::size_t>(min_degrees, (std::size_t)(c.dim() + 1));
  if (degrees == 0) degrees = 1;
  out.dims.resize(degrees);
  for (std::size_t n = 0; n < degrees; ++n) out.dims[n] = c.count_of_dim((int)n);
  out.d.reserve(degrees);
  for (std::size_t n = 0; n < degrees; ++n) {
    if ((int)n <= c.dim())
      out.d.push_back(boundary_matrix(c, (int)n, p));
    else
      out.d.push_back(FpMatrix(out.dims[n - 1], 0, p));
  }
  return out;
}

HomologyBasis::HomologyBasis(const ChainComplexFp& k) {
  std::size_t degrees = k.dims.size();
  dim_.resize(degrees);
  reps_.reserve(degrees);
  solver_.reserve(degrees);
  for (std::size_t n = 0; n < degrees; ++n) {
    FpMatrix cycles = k.d[n].kernel_basis();
    FpMatrix boundaries(k.dims[n], 0, k.p);
    if (n + 1 < degrees) {
      const FpMatrix& dn1 = k.d[n + 1];
      boundaries = dn1.columns(dn1.independent_cols_mod(FpMatrix(k.dims[n], 0, k.p)));
    }
    std::vector<std::size_t> pick = cycles.independent_cols_mod(boundaries);
    FpMatrix reps = cycles.columns(pick);
    dim_[n] = reps.cols();
    solver_.push_back(boundaries.hcat(reps));
    reps_.push_back(std::move(reps));
  }
}

std::vector<uint64_t> HomologyBasis::coords(
    std::size_t n, const std::vector<uint64_t>& v) const {
  const FpMatrix& m = solver_[n];
  auto sol = m.solve(v);
  if (!sol)
    throw std::logic_error("HomologyBasis::coords: vector is not a cycle");
  std::size_t h = reps_[n].cols();
  std::vector<uint64_t> out(sol->end() - h, sol->end());
  return out;
}

ShortExactSequence ses_from_subcomplex(const Complex& sub, const Complex& whole,
                                       uint64_t p) {
  if (!sub.is_subcomplex_of(whole))
    throw std::invalid_argument("ses_from_subcomplex: not a subcomplex");
  if (whole.empty())
    throw std::invalid_argument("ses_from_subcomplex: empty ambient complex");
  std::size_t degrees = (std::size_t)(whole.dim() + 1);
  ShortExactSequence ses;
  ses.Y = chain_complex_of(whole, p);
  ses.X = chain_complex_of(sub, p, degrees);

  // Z: quotient basis per degree = simplices of whole not in sub
  ses.Z.p = p;
  ses.Z.dims.resize(degrees);
  std::vector<std::vector<Simplex>> zbasis(degrees);
  std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> zindex(degrees);
  for (std::size_t n = 0; n < degrees; ++n) {
    for (const Simplex& s : whole.simplices_of_dim((int)n))
      if (!sub.contains(s)) zbasis[n].push_back(s);
    ses.Z.dims[n] = zbasis[n].size();
    for (std::size_t i = 0; i < zbasis[n].size(); ++i)
      zindex[n].emplace(zbasis[n][i], i);
  }
  for (std::size_t n = 0; n < degrees; ++n) {
    if (n == 0) {
      ses.Z.d.push_back(FpMatrix(0, ses.Z.dims[0], p));
      continue;
    }
    FpMatrix dz(ses.Z.dims[n - 1], ses.Z.dims[n], p);
    for (std::size_t j = 0; j < zbasis[n].size(); ++j) {
      Chain b = boundary_of(zbasis[n][j], p);
      for (const auto& [face, coeff] : b.terms) {
        auto it = zindex[n - 1].find(face);
        if (it != zindex[n - 1].end()) dz.set(it->second, j, coeff);
      }
    }
    ses.Z.d.push_back(std::move(dz));
  }

  // F: inclusion, G: projection
  for (std::size_t n = 0; n < degrees; ++n) {
    std::vector<Simplex> ybasis = whole.simplices_of_dim((int)n);
    std::unordered_map<Simplex, std::size_t, SimplexHash> yindex;
    for (std::size_t i = 0; i < ybasis.size(); ++i) yindex.emplace(ybasis[i], i);
    std::vector<Simplex> xbasis = sub.simplices_of_dim((int)n);
    FpMatrix f(ybasis.size(), xbasis.size(), p);
    for (std::size_t j = 0; j < xbasis.size(); ++j)
      f.set(yindex.at(xbasis[j]), j, 1);
    ses.F.f.push_back(std::move(f));
    FpMatrix g(zbasis[n].size(), ybasis.size(), p);
    for (std::size_t j = 0; j < ybasis.size(); ++j) {
      auto it = zindex[n].find(ybasis[j]);
      if (it != zindex[n].end()) g.set(it->second, j, 1);
    }
    ses.G.f.push_back(std::move(g));
  }
  return ses;
}

ExactnessReport verify_ses_exact(const ShortExactSequence& ses) {
  ExactnessReport rep;
  std::size_t degrees = ses.Y.dims.size();
  auto fail = [&](std::size_t n, const std::string& what) {
    rep.ok = false;
    rep.diagnostic = "degree " + std::to_string(n) + ": " + what;
    return rep;
  };
  for (std::size_t n = 0; n < degrees; ++n) {
    if (ses.F.f[n].rank() != ses.X.dims[n]) return fail(n, "F not injective");
    if (ses.G.f[n].rank() != ses.Z.dims[n]) return fail(n, "G not surjective");
    if (!ses.G.f[n].multiply(ses.F.f[n]).is_zero())
      return fail(n, "G o F is nonzero");
    if (ses.X.dims[n] + ses.Z.dims[n] != ses.Y.dims[n])
      return fail(n, "im F is smaller than ker G");
    if (n >= 1) {
      if (!(ses.Y.d[n].multiply(ses.F.f[n]) ==
            ses.F.f[n - 1].multiply(ses.X.d[n])))
        return fail(n, "F does not commute with boundaries");
      if (!(ses.Z.d[n].multiply(ses.G.f[n]) ==
            ses.G.f[n - 1].multiply(ses.Y.d[n])))
        return fail(n, "G does not commute with boundaries");
    }
  }
  return rep;
}

FpMatrix induced_on_homology(const ChainMapFp& f, const ChainComplexFp& src,
                             const HomologyBasis& hsrc,
                             const HomologyBasis& hdst, std::size_t n) {
  (void)src;
  FpMatrix out(hdst.dim(n), hsrc.dim(n), f.f[n].p());
  for (std::size_t j = 0; j < hsrc.dim(n); ++j) {
    std::vector<uint64_t> rep(hsrc.reps(n).rows());
    for (std::size_t i = 0; i < rep.size(); ++i) rep[i] = hsrc.reps(n).at(i, j);
    std::vector<uint64_t> image = f.f[n].apply(rep);
    std::vector<uint64_t> coords = hdst.coords(n, image);
    for (std::size_t i = 0; i < coords.size(); ++i) out.set(i, j, coords[i]);
  }
  return out;
}

FpMatrix connecting_homomorphism(const ShortExactSequence& ses,
                                 const HomologyBasis& hx,
                                 const HomologyBasis& hz, std::size_t n,
                                 uint64_t lift_shift) {
  uint64_t p = ses.Y.p;
  if (n == 0) return FpMatrix(0, hz.dim(0), p);
  FpMatrix out(hx.dim(n - 1), hz.dim(n), p);
  for (std::size_t j = 0; j < hz.dim(n); ++j) {
    std::vector<uint64_t> z(hz.reps(n).rows());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = hz.reps(n).at(i, j);
    auto y = ses.G.f[n].solve(z);
    if (!y) throw std::logic_error("connecting_homomorphism: G not surjective");
    std::vector<uint64_t> lift = *y;
    if (lift_shift != 0 && ses.X.dims[n] > 0) {
      // perturb by an element of im F; the result must not change
      std::vector<uint64_t> w(ses.X.dims[n]);
      for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = (lift_shift * (i + 1)) % p;
      std::vector<uint64_t> fw = ses.F.f[n].apply(w);
      for (std::size_t i = 0; i < lift.size(); ++i)
        lift[i] = fp_add(lift[i], fw[i], p);
    }
    std::vector<uint64_t> dy = ses.Y.d[n].apply(lift);
    auto x = ses.F.f[n - 1].solve(dy);
    if (!x)
      throw std::logic_error(
          "connecting_homomorphism: boundary of lift is not in im F "
          "(sequence not exact at degree " +
          std::to_string(n - 1) + ")");
    if (n >= 2) {
      std::vector<uint64_t> dx = ses.X.d[n - 1].apply(*x);
      for (uint64_t v : dx)
        if (v)
          throw std::logic_error(
              "connecting_homomorphism: pullback is not a cycle");
    }
    std::vector<uint64_t> coords = hx.coords(n - 1, *x);
    for (std::size_t i = 0; i < coords.size(); ++i) out.set(i, j, coords[i]);
  }
  return out;
}

ExactnessReport verify_les(const ShortExactSequence& ses) {
  ExactnessReport rep = verify_ses_exact(ses);
  if (!rep.ok) return rep;
  uint64_t p = ses.Y.p;
  std::size_t degrees = ses.Y.dims.size();
  HomologyBasis hx(ses.X), hy(ses.Y), hz(ses.Z);
  std::vector<FpMatrix> a, b, gamma;
  for (std::size_t n = 0; n < degrees; ++n) {
    a.push_back(induced_on_homology(ses.F, ses.X, hx, hy, n));
    b.push_back(induced_on_homology(ses.G, ses.Y, hy, hz, n));
    gamma.push_back(connecting_homomorphism(ses, hx, hz, n));
  }
  auto fail = [&](std::size_t n, const std::string& what) {
    rep.ok = false;
    rep.diagnostic = "H_" + std::to_string(n) + ": " + what;
    return rep;
  };
  for (std::size_t n = 0; n < degrees; ++n) {
    // node H_n(X): im gamma_{n+1} = ker a_n
    std::size_t rank_in =
        (n + 1 < degrees) ? gamma[n + 1].rank() : 0;
    if (n + 1 < degrees && !a[n].multiply(gamma[n + 1]).is_zero())
      return fail(n, "a o gamma nonzero at X");
    if (rank_in != hx.dim(n) - a[n].rank())
      return fail(n, "exactness fails at H(X)");
    // node H_n(Y): im a_n = ker b_n
    if (!b[n].multiply(a[n]).is_zero()) return fail(n, "b o a nonzero at Y");
    if (a[n].rank() != hy.dim(n) - b[n].rank())
      return fail(n, "exactness fails at H(Y)");
    // node H_n(Z): im b_n = ker gamma_n (gamma_0 is the zero map to 0)
    if (n >= 1) {
      if (!gamma[n].multiply(b[n]).is_zero())
        return fail(n, "gamma o b nonzero at Z");
      if (b[n].rank() != hz.dim(n) - gamma[n].rank())
        return fail(n, "exactness fails at H(Z)");
    } else {
      if (b[0].rank() != hz.dim(0))
        return fail(0, "H_0(Y) -> H_0(Z) not surjective");
    }
  }
  (void)p;
  return rep;
}

}  // namespace evatop
