#ifndef CATREP_CYCLOTOMIC_HPP
#define CATREP_CYCLOTOMIC_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "catrep/rational.hpp"

namespace catrep {

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, low degree first, monic.
// Computed by dividing x^n - 1 by Phi_d for every proper divisor d of n.
const std::vector<long long>& cyclotomic_polynomial(int n);

// An element of Q(zeta_n), stored as exact rational coordinates in the power
// basis 1, zeta, ..., zeta^{phi(n)-1}, fully reduced mod Phi_n. The
// representation is canonical, so structural equality is field equality.
class CycNumber {
public:
    CycNumber() : conductor_(1), coeffs_(1) {}
    explicit CycNumber(const Rational& r, int conductor = 1);

    static CycNumber zero(int conductor = 1) { return CycNumber(Rational(0), conductor); }
    static CycNumber one(int conductor = 1) { return CycNumber(Rational(1), conductor); }
    // zeta_n^k (k may be negative; reduced mod n)
    static CycNumber root_of_unity(int n, long long k);
    // arbitrary coefficient vector (length <= phi(n) is padded, longer is reduced)
    static CycNumber from_coeffs(int conductor, std::vector<Rational> coeffs);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    Rational rational_part() const; // the coefficient of 1

    // Re-expresses the number in Q(zeta_m); requires conductor | m.
    CycNumber embed(int m) const;

    CycNumber operator-() const;
    friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
    CycNumber& operator+=(const CycNumber& b) { return *this = *this + b; }
    CycNumber& operator-=(const CycNumber& b) { return *this = *this - b; }
    CycNumber& operator*=(const CycNumber& b) { return *this = *this * b; }

    CycNumber inverse() const; // throws on zero
    CycNumber conj() const;    // complex conjugation, zeta -> zeta^{n-1}

    friend bool operator==(const CycNumber& a, const CycNumber& b);
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    std::string str() const;

private:
    int conductor_;
    std::vector<Rational> coeffs_;
};

struct RankNullspace;

// A rows x cols matrix over Q(zeta_n); all entries share the matrix
// conductor. Zero-dimensional matrices are legal values.
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0), conductor_(1) {}
    CycMatrix(int rows, int cols, int conductor = 1);

    static CycMatrix identity(int n, int conductor = 1);
    static CycMatrix zero(int rows, int cols, int conductor = 1);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int conductor() const { return conductor_; }

    const CycNumber& at(int i, int j) const { return ent_[size_t(i) * cols_ + j]; }
    void set(int i, int j, const CycNumber& v);

    CycMatrix embed(int m) const;
    CycMatrix transpose() const;
    CycMatrix operator-() const;
    friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
    friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
    CycMatrix scaled(const CycNumber& c) const;
    CycMatrix kron(const CycMatrix& b) const; // left factor major

    bool is_zero() const;
    bool is_identity() const;
    friend bool operator==(const CycMatrix& a, const CycMatrix& b);
    friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

    // Exact elimination with deterministic pivoting (first nonzero entry by
    // row-major scan). The nullspace basis is the canonical reduced one, one
    // column vector per free column.
    RankNullspace rank_nullspace() const;
    int rank() const;
    bool is_invertible() const;
    CycMatrix inverse() const; // throws on non-square or singular

    std::string str() const;

private:
    int rows_, cols_, conductor_;
    std::vector<CycNumber> ent_;
};

struct RankNullspace {
    int rank = 0;
    std::vector<CycMatrix> nullspace; // cols x 1 column vectors
};

} // namespace catrep

#endif
