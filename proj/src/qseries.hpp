#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "half_int.hpp"
#include "weight.hpp"

namespace crr {

using BigInt = boost::multiprecision::cpp_int;

// Truncated series in q with exponents on the half-integer grid.  Exponents
// are stored doubled; coeff(e2) is the coefficient of q^{e2/2}.  Arithmetic
// truncates eagerly at the doubled order.
class QSeries {
public:
    explicit QSeries(int trunc2);
    static QSeries one(int trunc2);

    int trunc2() const { return trunc2_; }
    const BigInt& coeff2(int e2) const;
    void set2(int e2, BigInt v);
    void add2(int e2, const BigInt& v);

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    bool operator==(const QSeries& other) const;

    // In-place multiply by (1 - q^{d2/2})^{-1} resp. (1 + q^{d2/2}); d2 >= 1.
    void mulGeometricInverse(int d2);
    void mulBinomial(int d2);

    // Smallest doubled exponent where the two series differ, comparing
    // through min(trunc2).
    static std::optional<int> firstMismatch2(const QSeries& a, const QSeries& b);

    // "1 + q + 2q^2 + q^(5/2) + ..."
    std::string str() const;
    // Coefficients at integer exponents 0..trunc2/2 (for integer-grid series).
    std::vector<BigInt> integerCoeffs() const;
    bool hasHalfExponents() const;

private:
    int trunc2_;
    std::vector<BigInt> c_;  // index = doubled exponent
};

// One arithmetic-progression family of Euler factors: for every r >= 1 with
// r mod modulus in residues, contribute (1 - q^{r+off})^{-1} or (1 + q^{r+off}).
struct ProductFactor {
    enum class Form { GeometricInverse, Binomial };
    Form form = Form::GeometricInverse;
    int modulus = 1;
    std::vector<int> residues = {0};
    bool halfOffset = false;  // exponent r + 1/2 instead of r

    bool matches(int r) const {
        int m = r % modulus;
        for (int x : residues)
            if (m == x) return true;
        return false;
    }
};

struct ProductSide {
    std::vector<ProductFactor> factors;
};

// Truncated expansion of the product side; exact.
QSeries expandProduct(const ProductSide& ps, int trunc2);

// Convenience builders for the cataloged identities.
ProductSide productAllGeometric();                           // prod (1-q^r)^{-1}
ProductSide productGeometricResidues(int modulus, std::vector<int> residues);
ProductSide productAllBinomial();                            // prod (1+q^r)
ProductSide productBinomialResidues(int modulus, std::vector<int> residues);
ProductSide productBinomialHalfShift();                      // prod (1+q^{r+1/2})

// Character truncated by box count: coefficient of e^{wt} q^{boxes}.
class WeightedSeries {
public:
    explicit WeightedSeries(int boxBudget) : budget_(boxBudget) {}
    int budget() const { return budget_; }
    void add(const Weight& w, int boxes, const BigInt& v);
    const std::map<std::pair<Weight, int>, BigInt>& terms() const { return terms_; }
    bool operator==(const WeightedSeries&) const = default;

private:
    int budget_;
    std::map<std::pair<Weight, int>, BigInt> terms_;
};

}  // namespace crr
