#pragma once

// Exact linear algebra over Z and F2: Smith normal form, kernels, linear
// solves, and subquotient presentations (kernel mod image, with coordinates
// for inducing maps on homology).  Everything is dense; the matrices in this
// project stay tiny.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "equihom/common.hpp"

namespace equihom {

using i64 = long long;

struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<i64> a; // row-major

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat scalar(int n, i64 s) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = s;
        return m;
    }

    Mat operator*(const Mat& o) const {
        assert(cols == o.rows);
        Mat r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                i64 v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        assert(rows == o.rows && cols == o.cols);
        Mat r = *this;
        for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
        return r;
    }

    Mat transpose() const {
        Mat r(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    Mat scaled(i64 s) const {
        Mat r = *this;
        for (auto& v : r.a) v *= s;
        return r;
    }

    std::vector<i64> apply(const std::vector<i64>& x) const {
        assert(static_cast<int>(x.size()) == cols);
        std::vector<i64> y(rows, 0);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](i64 v) { return v == 0; });
    }

    Mat mod(i64 m) const {
        Mat r = *this;
        if (m != 0)
            for (auto& v : r.a) v = ((v % m) + m) % m;
        return r;
    }

    /// Horizontal block concatenation.
    static Mat hcat(const Mat& l, const Mat& r) {
        assert(l.rows == r.rows);
        Mat m(l.rows, l.cols + r.cols);
        for (int i = 0; i < l.rows; ++i) {
            for (int j = 0; j < l.cols; ++j) m.at(i, j) = l.at(i, j);
            for (int j = 0; j < r.cols; ++j) m.at(i, l.cols + j) = r.at(i, j);
        }
        return m;
    }

    static Mat vcat(const Mat& t, const Mat& b) {
        assert(t.cols == b.cols);
        Mat m(t.rows + b.rows, t.cols);
        for (int i = 0; i < t.rows; ++i)
            for (int j = 0; j < t.cols; ++j) m.at(i, j) = t.at(i, j);
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) m.at(t.rows + i, j) = b.at(i, j);
        return m;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows; ++i) {
            if (i) os << "; ";
            for (int j = 0; j < cols; ++j) {
                if (j) os << " ";
                os << at(i, j);
            }
        }
        os << "]";
        return os.str();
    }
};

// ---------------------------------------------------------------------------
// F2 elimination

inline Mat f2_normalize(const Mat& m) { return m.mod(2); }

/// Row echelon form mod 2, returns pivot columns of the reduced matrix.
inline std::vector<int> f2_row_reduce(Mat& m) {
    m = m.mod(2);
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(p, j));
        for (int i = 0; i < m.rows; ++i)
            if (i != r && m.at(i, c))
                for (int j = 0; j < m.cols; ++j) m.at(i, j) = (m.at(i, j) + m.at(r, j)) & 1;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline int f2_rank(Mat m) { return static_cast<int>(f2_row_reduce(m).size()); }

/// Columns spanning ker(m) mod 2.
inline Mat f2_kernel(const Mat& m) {
    Mat e = m;
    std::vector<int> pivots = f2_row_reduce(e);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    int free_count = m.cols - static_cast<int>(pivots.size());
    Mat k(m.cols, free_count);
    int idx = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        k.at(c, idx) = 1;
        // back-substitute pivot rows
        for (size_t pr = 0; pr < pivots.size(); ++pr)
            if (e.at(static_cast<int>(pr), c)) k.at(pivots[pr], idx) = 1;
        ++idx;
    }
    return k;
}

/// Solve A x = b mod 2 (single RHS).  Returns nullopt if inconsistent.
inline std::optional<std::vector<i64>> f2_solve(const Mat& A, const std::vector<i64>& b) {
    Mat aug = Mat::hcat(A, Mat(A.rows, 1));
    for (int i = 0; i < A.rows; ++i) aug.at(i, A.cols) = ((b[i] % 2) + 2) % 2;
    std::vector<int> pivots = f2_row_reduce(aug);
    std::vector<i64> x(A.cols, 0);
    for (size_t pr = 0; pr < pivots.size(); ++pr) {
        if (pivots[pr] == A.cols) return std::nullopt; // pivot in RHS column
        x[pivots[pr]] = aug.at(static_cast<int>(pr), A.cols);
    }
    return x;
}

// ---------------------------------------------------------------------------
// Smith normal form over Z

struct Snf {
    Mat s;    // diagonal form, U*A*V = s
    Mat u;    // row transform
    Mat uinv; // inverse of u
    Mat v;    // column transform
    int rank = 0;
};

inline Snf smith_normal_form(Mat A) {
    const int n = A.rows, m = A.cols;
    Snf out;
    out.u = Mat::identity(n);
    out.uinv = Mat::identity(n);
    out.v = Mat::identity(m);

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < m; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < n; ++c) std::swap(out.u.at(i, c), out.u.at(j, c));
        for (int r = 0; r < n; ++r) std::swap(out.uinv.at(r, i), out.uinv.at(r, j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < n; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < m; ++r) std::swap(out.v.at(r, i), out.v.at(r, j));
    };
    auto add_row = [&](int dst, int src, i64 f) { // row dst += f * row src
        for (int c = 0; c < m; ++c) A.at(dst, c) += f * A.at(src, c);
        for (int c = 0; c < n; ++c) out.u.at(dst, c) += f * out.u.at(src, c);
        for (int r = 0; r < n; ++r) out.uinv.at(r, src) -= f * out.uinv.at(r, dst);
    };
    auto add_col = [&](int dst, int src, i64 f) {
        for (int r = 0; r < n; ++r) A.at(r, dst) += f * A.at(r, src);
        for (int r = 0; r < m; ++r) out.v.at(r, dst) += f * out.v.at(r, src);
    };
    auto negate_row = [&](int i) {
        for (int c = 0; c < m; ++c) A.at(i, c) = -A.at(i, c);
        for (int c = 0; c < n; ++c) out.u.at(i, c) = -out.u.at(i, c);
        for (int r = 0; r < n; ++r) out.uinv.at(r, i) = -out.uinv.at(r, i);
    };

    int t = 0;
    const int kmax = std::min(n, m);
    while (t < kmax) {
        // find smallest nonzero entry in the lower-right block
        int pi = -1, pj = -1;
        i64 best = 0;
        for (int i = t; i < n; ++i)
            for (int j = t; j < m; ++j) {
                i64 v = std::llabs(A.at(i, j));
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (pi < 0) break;
        swap_rows(t, pi);
        swap_cols(t, pj);
        bool clean = true;
        for (int i = t + 1; i < n; ++i) {
            i64 q = A.at(i, t) / A.at(t, t);
            if (q) add_row(i, t, -q);
            if (A.at(i, t) != 0) clean = false;
        }
        for (int j = t + 1; j < m; ++j) {
            i64 q = A.at(t, j) / A.at(t, t);
            if (q) add_col(j, t, -q);
            if (A.at(t, j) != 0) clean = false;
        }
        if (!clean) continue; // repeat with a smaller pivot
        // divisibility pass: pivot must divide everything below-right
        bool redo = false;
        for (int i = t + 1; i < n && !redo; ++i)
            for (int j = t + 1; j < m; ++j)
                if (A.at(i, j) % A.at(t, t) != 0) {
                    add_row(t, i, 1);
                    redo = true;
                    break;
                }
        if (redo) continue;
        if (A.at(t, t) < 0) negate_row(t);
        ++t;
    }
    out.rank = t;
    out.s = A;
    return out;
}

/// Columns spanning ker(A) over Z (a saturated sublattice basis).
inline Mat z_kernel(const Mat& A) {
    Snf f = smith_normal_form(A);
    int free_count = A.cols - f.rank;
    Mat k(A.cols, free_count);
    for (int j = 0; j < free_count; ++j)
        for (int r = 0; r < A.cols; ++r) k.at(r, j) = f.v.at(r, f.rank + j);
    return k;
}

/// Solve A x = b over Z.  Returns nullopt if no integral solution.
inline std::optional<std::vector<i64>> z_solve(const Mat& A, const std::vector<i64>& b) {
    Snf f = smith_normal_form(A);
    std::vector<i64> ub = f.u.apply(b);
    std::vector<i64> y(A.cols, 0);
    for (int i = 0; i < std::min(A.rows, A.cols); ++i) {
        i64 d = f.s.at(i, i);
        if (d == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % d != 0) return std::nullopt;
            y[i] = ub[i] / d;
        }
    }
    for (int i = std::min(A.rows, A.cols); i < A.rows; ++i)
        if (ub[i] != 0) return std::nullopt;
    return f.v.apply(y);
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups

/// rank + invariant factors (each dividing the next, all > 1).
struct AbGroup {
    i64 rank = 0;
    std::vector<i64> torsion;

    bool is_zero() const { return rank == 0 && torsion.empty(); }

    bool operator==(const AbGroup& o) const { return rank == o.rank && torsion == o.torsion; }

    AbGroup& operator+=(const AbGroup& o) {
        rank += o.rank;
        torsion.insert(torsion.end(), o.torsion.begin(), o.torsion.end());
        std::sort(torsion.begin(), torsion.end());
        return *this;
    }

    std::string to_string(Coeff c = Coeff::Z) const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        auto sep = [&] {
            if (!first) os << " + ";
            first = false;
        };
        if (c == Coeff::F2) {
            // every summand is Z/2; report as a vector space
            i64 dim = rank + static_cast<i64>(torsion.size());
            sep();
            os << "F2";
            if (dim > 1) os << "^" << dim;
            return os.str();
        }
        if (rank > 0) {
            sep();
            os << "Z";
            if (rank > 1) os << "^" << rank;
        }
        i64 run_val = 0, run_len = 0;
        auto flush = [&] {
            if (run_len == 0) return;
            sep();
            os << "Z/" << run_val;
            if (run_len > 1) os << "^" << run_len;
            run_len = 0;
        };
        for (i64 tval : torsion) {
            if (run_len && tval == run_val) {
                ++run_len;
            } else {
                flush();
                run_val = tval;
                run_len = 1;
            }
        }
        flush();
        return os.str();
    }
};

/// Direct sum of n copies.
inline AbGroup ab_sum(const AbGroup& g, i64 n) {
    AbGroup out;
    out.rank = g.rank * n;
    for (i64 i = 0; i < n; ++i)
        out.torsion.insert(out.torsion.end(), g.torsion.begin(), g.torsion.end());
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

// ---------------------------------------------------------------------------
// Homology of a two-step complex  C_in --d_in--> C --d_out--> C_next
// as a presented subquotient ker(d_out)/im(d_in), with coordinates so chain
// maps induce maps on homology.  Scalars are Z (mode Z) or F2 (mode F2).

class Subquotient {
public:
    Subquotient() = default;

    /// d_out may have 0 rows (no outgoing differential), d_in 0 cols.
    Subquotient(Coeff mode, const Mat& d_in, const Mat& d_out) : mode_(mode) {
        ambient_ = d_out.cols;
        assert(d_in.rows == ambient_);
        kernel_ = (mode == Coeff::F2) ? f2_kernel(d_out) : z_kernel(d_out);
        // express image columns in kernel coordinates
        Mat b(kernel_.cols, d_in.cols);
        for (int j = 0; j < d_in.cols; ++j) {
            std::vector<i64> col(ambient_);
            for (int r = 0; r < ambient_; ++r) col[r] = d_in.at(r, j);
            auto x = coords_in_kernel(col);
            require(x.has_value(), "subquotient: image does not lie in kernel (not a complex?)");
            for (int r = 0; r < kernel_.cols; ++r) b.at(r, j) = (*x)[r];
        }
        if (mode == Coeff::F2) {
            // rows of b^T span the image inside kernel coordinates; RREF them
            Mat bt = b.mod(2).transpose();
            img_pivots_ = f2_row_reduce(bt);
            ech_ = bt;
            std::vector<char> seen(kernel_.cols, 0);
            for (int c : img_pivots_) seen[c] = 1;
            for (int c = 0; c < kernel_.cols; ++c)
                if (!seen[c]) free_coords_.push_back(c);
            group_.rank = 0;
            group_.torsion.assign(free_coords_.size(), 2);
        } else {
            snf_ = smith_normal_form(b);
            for (int i = 0; i < std::min(b.rows, b.cols); ++i) {
                i64 d = snf_.s.at(i, i);
                if (d == 0) break;
                diag_.push_back(d);
            }
            for (int i = static_cast<int>(diag_.size()); i < b.rows; ++i) group_.rank += 1;
            for (i64 d : diag_)
                if (d > 1) group_.torsion.push_back(d);
            std::sort(group_.torsion.begin(), group_.torsion.end());
        }
    }

    const AbGroup& group() const { return group_; }
    int ambient_dim() const { return ambient_; }

    /// Coordinates of the homology class of an ambient cycle, in the reduced
    /// presentation (free then torsion coordinates for Z; F2 coordinates for F2).
    /// Throws if v is not a cycle.
    std::vector<i64> class_of(const std::vector<i64>& v) const {
        auto kc = coords_in_kernel(v);
        require(kc.has_value(), "subquotient: vector is not a cycle");
        if (mode_ == Coeff::F2) {
            std::vector<i64> c = *kc;
            for (auto& x : c) x = ((x % 2) + 2) % 2;
            // reduce by image echelon rows
            for (size_t r = 0; r < img_pivots_.size(); ++r) {
                int p = img_pivots_[r];
                if (c[p]) {
                    for (int j = 0; j < ech_.cols; ++j) c[j] = (c[j] + ech_.at(static_cast<int>(r), j)) & 1;
                }
            }
            std::vector<i64> out;
            for (int fc : free_coords_) out.push_back(c[fc]);
            return out;
        }
        // Z: y = U * kc ; coordinate i lives mod diag_[i] (or free beyond)
        std::vector<i64> y = snf_.u.apply(*kc);
        std::vector<i64> out;
        // free coordinates first (rows past the diagonal), then torsion > 1
        for (size_t i = diag_.size(); i < y.size(); ++i) out.push_back(y[i]);
        for (size_t i = 0; i < diag_.size(); ++i) {
            i64 d = diag_[i];
            if (d > 1) out.push_back(((y[i] % d) + d) % d);
        }
        return out;
    }

    /// Ambient representative for each presentation generator.
    std::vector<std::vector<i64>> generators() const {
        std::vector<std::vector<i64>> gens;
        if (mode_ == Coeff::F2) {
            for (int fc : free_coords_) {
                std::vector<i64> kcoord(kernel_.cols, 0);
                kcoord[fc] = 1;
                gens.push_back(kernel_mul(kcoord));
            }
            return gens;
        }
        // generator i of the quotient corresponds to uinv * e_i in kernel coords
        auto push_gen = [&](size_t i) {
            std::vector<i64> e(kernel_.cols, 0);
            for (int r = 0; r < kernel_.cols; ++r) e[r] = snf_.uinv.at(r, static_cast<int>(i));
            gens.push_back(kernel_mul(e));
        };
        for (size_t i = diag_.size(); i < static_cast<size_t>(kernel_.cols); ++i) push_gen(i);
        for (size_t i = 0; i < diag_.size(); ++i)
            if (diag_[i] > 1) push_gen(i);
        return gens;
    }

private:
    std::optional<std::vector<i64>> coords_in_kernel(const std::vector<i64>& v) const {
        if (mode_ == Coeff::F2) return f2_solve(kernel_, v);
        return z_solve(kernel_, v);
    }

    std::vector<i64> kernel_mul(const std::vector<i64>& kcoord) const {
        std::vector<i64> out(ambient_, 0);
        for (int r = 0; r < ambient_; ++r)
            for (int c = 0; c < kernel_.cols; ++c) out[r] += kernel_.at(r, c) * kcoord[c];
        return out;
    }

    Coeff mode_ = Coeff::Z;
    int ambient_ = 0;
    Mat kernel_;
    Mat ech_;                     // F2: reduced rows spanning the image (kernel coords)
    std::vector<int> img_pivots_; // F2
    std::vector<int> free_coords_;
    Snf snf_;                     // Z
    std::vector<i64> diag_;       // Z: nonzero invariant factors (incl. 1s)
    AbGroup group_;
};

/// Homology group of d_in -> . -> d_out without coordinates.
inline AbGroup homology_group(Coeff mode, const Mat& d_in, const Mat& d_out) {
    if (mode == Coeff::F2) {
        int cycles = d_out.cols - f2_rank(d_out);
        int boundaries = f2_rank(d_in);
        AbGroup g;
        g.torsion.assign(static_cast<size_t>(cycles - boundaries), 2);
        return g;
    }
    return Subquotient(Coeff::Z, d_in, d_out).group();
}

} // namespace equihom
