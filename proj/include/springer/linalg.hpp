#pragma once

#include <Eigen/Core>
#include <cstdint>

#include "springer/errors.hpp"
#include "springer/rational.hpp"

namespace springer {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using BigIntMatrix = Eigen::Matrix<Integer, Eigen::Dynamic, Eigen::Dynamic>;

inline RationalMatrix rational_zero_matrix(Eigen::Index rows, Eigen::Index cols) {
    RationalMatrix m(rows, cols);
    m.setConstant(Rational(0));
    return m;
}

inline RationalMatrix rational_identity(Eigen::Index n) {
    RationalMatrix m = rational_zero_matrix(n, n);
    for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

// Rank by Bareiss fraction-free elimination on the denominator-cleared
// integer matrix; exact for any size we care about.
template <typename Derived>
long rank(const Eigen::MatrixBase<Derived>& mat) {
    BigIntMatrix a(mat.rows(), mat.cols());
    for (Eigen::Index i = 0; i < mat.rows(); ++i) {
        Integer row_lcm = 1;
        for (Eigen::Index j = 0; j < mat.cols(); ++j) {
            Rational x(mat(i, j));
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), x.get_den_mpz_t());
        }
        for (Eigen::Index j = 0; j < mat.cols(); ++j) {
            Rational x(mat(i, j));
            a(i, j) = x.get_num() * (row_lcm / x.get_den());
        }
    }

    const Eigen::Index rows = a.rows(), cols = a.cols();
    Eigen::Index r = 0;
    Integer prev = 1;
    for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
        Eigen::Index pivot = -1;
        for (Eigen::Index i = r; i < rows; ++i)
            if (a(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r) a.row(pivot).swap(a.row(r));
        for (Eigen::Index i = r + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = t;
            }
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return static_cast<long>(r);
}

// Homology dimension at the middle of  A --d_in--> B --d_out--> C,
// i.e. dim ker(d_out) - rank(d_in).  d_in is B x A, d_out is C x B.
inline long homology_rank(const RationalMatrix& d_in, const RationalMatrix& d_out) {
    if (d_in.rows() != d_out.cols())
        throw NotAComplex("middle dimensions disagree: d_in lands in dim " +
                          std::to_string(d_in.rows()) + ", d_out starts from dim " +
                          std::to_string(d_out.cols()));
    if (d_out.rows() > 0 && d_in.cols() > 0) {
        RationalMatrix comp = d_out * d_in;
        for (Eigen::Index i = 0; i < comp.rows(); ++i)
            for (Eigen::Index j = 0; j < comp.cols(); ++j)
                if (comp(i, j) != 0) throw NotAComplex("d_out * d_in is nonzero");
    }
    long mid = static_cast<long>(d_in.rows());
    return mid - rank(d_out) - rank(d_in);
}

}  // namespace springer
