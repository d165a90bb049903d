#include "qseries.hpp"

#include <sstream>

namespace crr {

QSeries::QSeries(int trunc2) : trunc2_(trunc2) {
    if (trunc2 < 0) throw DomainError("series truncation must be >= 0");
    c_.assign(trunc2_ + 1, BigInt(0));
}

QSeries QSeries::one(int trunc2) {
    QSeries s(trunc2);
    s.c_[0] = 1;
    return s;
}

const BigInt& QSeries::coeff2(int e2) const {
    static const BigInt zero(0);
    if (e2 < 0 || e2 > trunc2_) return zero;
    return c_[e2];
}

void QSeries::set2(int e2, BigInt v) {
    if (e2 < 0) throw DomainError("series exponent must be >= 0");
    if (e2 > trunc2_) return;
    c_[e2] = std::move(v);
}

void QSeries::add2(int e2, const BigInt& v) {
    if (e2 < 0) throw DomainError("series exponent must be >= 0");
    if (e2 > trunc2_) return;
    c_[e2] += v;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc2_, b.trunc2_));
    for (int e = 0; e <= r.trunc2_; ++e) r.c_[e] = a.c_[e] + b.c_[e];
    return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc2_, b.trunc2_));
    for (int e = 0; e <= r.trunc2_; ++e) r.c_[e] = a.c_[e] - b.c_[e];
    return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.trunc2_, b.trunc2_));
    for (int i = 0; i <= r.trunc2_ && i <= a.trunc2_; ++i) {
        if (a.c_[i] == 0) continue;
        for (int j = 0; i + j <= r.trunc2_ && j <= b.trunc2_; ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return r;
}

bool QSeries::operator==(const QSeries& other) const {
    return trunc2_ == other.trunc2_ && c_ == other.c_;
}

void QSeries::mulGeometricInverse(int d2) {
    if (d2 < 1) throw DomainError("factor exponent must be positive");
    for (int e = d2; e <= trunc2_; ++e) c_[e] += c_[e - d2];
}

void QSeries::mulBinomial(int d2) {
    if (d2 < 1) throw DomainError("factor exponent must be positive");
    for (int e = trunc2_; e >= d2; --e) c_[e] += c_[e - d2];
}

std::optional<int> QSeries::firstMismatch2(const QSeries& a, const QSeries& b) {
    const int t = std::min(a.trunc2_, b.trunc2_);
    for (int e = 0; e <= t; ++e)
        if (a.c_[e] != b.c_[e]) return e;
    return std::nullopt;
}

std::string QSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (int e = 0; e <= trunc2_; ++e) {
        if (c_[e] == 0) continue;
        BigInt v = c_[e];
        if (first) {
            if (v < 0) os << "-";
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        first = false;
        if (v < 0) v = -v;
        const bool unitCoeff = (v == 1) && e != 0;
        if (!unitCoeff) os << v.str();
        if (e > 0) {
            if (e == 2)
                os << "q";
            else if (e % 2 == 0)
                os << "q^" << e / 2;
            else
                os << "q^(" << e << "/2)";
        }
    }
    if (first) os << "0";
    return os.str();
}

std::vector<BigInt> QSeries::integerCoeffs() const {
    std::vector<BigInt> out;
    for (int e = 0; e <= trunc2_; e += 2) out.push_back(c_[e]);
    return out;
}

bool QSeries::hasHalfExponents() const {
    for (int e = 1; e <= trunc2_; e += 2)
        if (c_[e] != 0) return true;
    return false;
}

QSeries expandProduct(const ProductSide& ps, int trunc2) {
    QSeries s = QSeries::one(trunc2);
    for (const ProductFactor& f : ps.factors) {
        if (f.modulus < 1) throw DomainError("product factor modulus must be >= 1");
        for (int r = 1;; ++r) {
            const int e2 = 2 * r + (f.halfOffset ? 1 : 0);
            if (e2 > trunc2) break;
            if (!f.matches(r)) continue;
            if (f.form == ProductFactor::Form::GeometricInverse)
                s.mulGeometricInverse(e2);
            else
                s.mulBinomial(e2);
        }
    }
    return s;
}

ProductSide productAllGeometric() { return {{ProductFactor{}}}; }

ProductSide productGeometricResidues(int modulus, std::vector<int> residues) {
    return {{ProductFactor{ProductFactor::Form::GeometricInverse, modulus, std::move(residues),
                           false}}};
}

ProductSide productAllBinomial() {
    return {{ProductFactor{ProductFactor::Form::Binomial, 1, {0}, false}}};
}

ProductSide productBinomialResidues(int modulus, std::vector<int> residues) {
    return {{ProductFactor{ProductFactor::Form::Binomial, modulus, std::move(residues), false}}};
}

ProductSide productBinomialHalfShift() {
    return {{ProductFactor{ProductFactor::Form::Binomial, 1, {0}, true}}};
}

void WeightedSeries::add(const Weight& w, int boxes, const BigInt& v) {
    if (boxes > budget_) return;
    terms_[{w, boxes}] += v;
}

}  // namespace crr
