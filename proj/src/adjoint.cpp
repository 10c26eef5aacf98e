#include "adjfactor/adjoint.hpp"

namespace af {

namespace {

int ord_up(const UPoly& u) {
    for (int i = 0; i <= u.deg(); ++i)
        if (!u.get(i).is_zero()) return i;
    return -1;
}

}  // namespace

bool CurveBranches::fully_resolved() const {
    for (const auto& pb : branches)
        for (const auto& b : pb)
            if (b.delta2 > 0) return false;
    return true;
}

CurveBranches curve_branch_data(const BPoly& f, int trunc, Rng& rng) {
    CurveBranches data;
    data.points = singular_points(f, rng);
    data.branches.reserve(data.points.size());
    for (const auto& p : data.points) data.branches.push_back(puiseux_branches(p, trunc, rng));
    return data;
}

int monomial_count(int m) { return m < 0 ? 0 : (m + 1) * (m + 2) / 2; }

int monomial_index(int m, int i, int j) {
    // ascending j, then ascending i within each j
    int idx = 0;
    for (int jj = 0; jj < j; ++jj) idx += m - jj + 1;
    return idx + i;
}

Mat adjoint_conditions(const CurveBranches& data, const Field& k, int m) {
    int cols = monomial_count(m);
    Mat rows(k, 0, cols);
    if (m < 0) return rows;

    for (std::size_t pi = 0; pi < data.points.size(); ++pi) {
        const SingPoint& p = data.points[pi];
        for (const PuiseuxBranch& b : data.branches[pi]) {
            int v = b.vcond;
            if (v <= 0) continue;
            const Field& E = b.ext;
            int edeg = E.ext_degree();
            Coeff y0 = b.from_pt(p.y0);
            UPoly yt = UPoly::constant(y0) + b.yseries;  // value of y along the branch
            yt = yt.truncate(v);

            // powers of the two coordinate series mod t^v
            std::vector<UPoly> ypow(m + 1, UPoly::one(E));
            for (int j = 1; j <= m; ++j) ypow[j] = (ypow[j - 1] * yt).truncate(v);

            std::vector<UPoly> spow(m + 1, UPoly::one(E));
            UPoly sbase(E);
            if (p.at_infinity) {
                sbase = UPoly::monomial(E, b.e, b.xunit).truncate(v);  // z(t)
            } else {
                Coeff x0 = b.from_pt(p.x0);
                sbase = (UPoly::constant(x0) + UPoly::monomial(E, b.e, b.xunit)).truncate(v);
            }
            for (int j = 1; j <= m; ++j) spow[j] = (spow[j - 1] * sbase).truncate(v);

            // one k-row per base-field component of each t-coefficient < v
            std::vector<std::vector<Coeff>> block(
                static_cast<std::size_t>(v) * edeg, std::vector<Coeff>(cols, Coeff::zero(k)));
            for (int j = 0; j <= m; ++j) {
                for (int i = 0; i + j <= m; ++i) {
                    // affine: x^i y^j; at infinity: y^j z^(m-i-j)
                    UPoly term = p.at_infinity ? (ypow[j] * spow[m - i - j]).truncate(v)
                                               : (spow[i] * ypow[j]).truncate(v);
                    int col = monomial_index(m, i, j);
                    for (int l = 0; l < v; ++l) {
                        Coeff c = term.get(l);
                        if (c.is_zero()) continue;
                        const auto& rep = c.rep();
                        for (int comp = 0; comp < static_cast<int>(rep.size()); ++comp)
                            block[static_cast<std::size_t>(l) * edeg + comp][col] =
                                Coeff::from_scalar(k, rep[comp]);
                    }
                }
            }
            for (auto& r : block) rows.append_row(r);
        }
    }
    return rows;
}

AdjointBasis adjoint_basis_from(const CurveBranches& data, const Field& k, int m) {
    AdjointBasis out;
    out.degree = m;
    if (m < 0) {
        out.rows = Mat(k, 0, 0);
        return out;
    }
    Mat cond = adjoint_conditions(data, k, m);
    out.rows = right_kernel(cond);
    for (std::size_t r = 0; r < out.rows.rows(); ++r) {
        std::vector<UPoly> yc(m + 1, UPoly::zero(k));
        for (int j = 0; j <= m; ++j) {
            std::vector<Coeff> xc(m - j + 1, Coeff::zero(k));
            for (int i = 0; i + j <= m; ++i) xc[i] = out.rows.at(r, monomial_index(m, i, j));
            yc[j] = UPoly(k, std::move(xc));
        }
        out.basis.push_back(BPoly(k, std::move(yc)));
    }
    return out;
}

AdjointBasis adjoint_basis(const BPoly& f, int m, Rng& rng) {
    int d = f.total_degree();
    check(f.field().characteristic() == 0 ||
              f.field().characteristic() > static_cast<std::uint64_t>(d),
          Err::CharacteristicTooSmall, "adjoint computation needs char 0 or p > deg F");
    CurveBranches data = curve_branch_data(f, default_truncation(d), rng);
    return adjoint_basis_from(data, f.field(), m);
}

ASpace restrict_to_A(const AdjointBasis& adj, int curve_degree) {
    ASpace out;
    const int width = std::max(curve_degree - 1, 0);  // coefficients of 1..y^(d-2)
    Field k = Field::rationals();
    if (!adj.basis.empty()) k = adj.basis[0].field();
    Mat rows(k, 0, width);
    for (const auto& h : adj.basis) {
        UPoly restr = h.eval_x0();
        check(restr.deg() <= curve_degree - 2, Err::Internal, "restriction degree too large");
        std::vector<Coeff> row(width, Coeff::zero(k));
        for (int i = 0; i <= restr.deg(); ++i) row[i] = restr.get(i);
        rows.append_row(row);
    }
    if (adj.basis.empty()) {
        out.rows = Mat(k, 0, width);
        return out;
    }
    out.rows = row_space(rows);
    for (std::size_t r = 0; r < out.rows.rows(); ++r) {
        std::vector<Coeff> c(width, Coeff::zero(k));
        for (std::size_t j = 0; j < out.rows.cols(); ++j) c[j] = out.rows.at(r, j);
        out.basis.push_back(UPoly(k, std::move(c)));
    }
    return out;
}

bool verify_adjoint(const CurveBranches& data, const BPoly& h, int m, int curve_degree) {
    for (std::size_t pi = 0; pi < data.points.size(); ++pi) {
        const SingPoint& p = data.points[pi];
        for (const PuiseuxBranch& b : data.branches[pi]) {
            if (b.vcond <= 0) continue;
            Embedding emb = base_embedding(h.field(), b.ext);
            BPoly hE = emb(h);
            UPoly val;
            if (p.at_infinity) {
                // homogenize to degree m in the chart x = 1
                int d = m;
                const Field& E = b.ext;
                Coeff y0 = b.from_pt(p.y0);
                UPoly yt = (UPoly::constant(y0) + b.yseries).truncate(b.vcond);
                UPoly zt = UPoly::monomial(E, b.e, b.xunit).truncate(b.vcond);
                UPoly acc = UPoly::zero(E);
                for (int j = 0; j <= hE.degy(); ++j)
                    for (int i = 0; i <= hE.ycoeff(j).deg(); ++i) {
                        Coeff c = hE.coeff(i, j);
                        if (c.is_zero()) continue;
                        UPoly term = UPoly::constant(c);
                        for (int s = 0; s < j; ++s) term = (term * yt).truncate(b.vcond);
                        for (int s = 0; s < d - i - j; ++s) term = (term * zt).truncate(b.vcond);
                        acc = acc + term;
                    }
                val = acc;
            } else {
                PuiseuxBranch shifted = b;
                Coeff x0 = b.from_pt(p.x0);
                Coeff y0 = b.from_pt(p.y0);
                BPoly hloc = hE.translate(x0, y0);
                shifted.trunc = b.vcond;
                val = branch_substitute(hloc, shifted);
            }
            int o = ord_up(val);
            if (o >= 0 && o < b.vcond) return false;
        }
    }
    return true;
}

}  // namespace af
