#pragma once

#include <cstdint>
#include <vector>

namespace flagorbits::gfp {

// Dense row-major matrix over GF(p) for small primes p. Rows are vectors of
// residues in [0, p).
using Vec = std::vector<std::uint8_t>;
using Mat = std::vector<Vec>;

inline std::uint8_t add(std::uint8_t a, std::uint8_t b, int p) { return (a + b) % p; }
inline std::uint8_t sub(std::uint8_t a, std::uint8_t b, int p) { return (a + p - b) % p; }
inline std::uint8_t mul(std::uint8_t a, std::uint8_t b, int p) { return (a * b) % p; }
std::uint8_t inv(std::uint8_t a, int p);

Mat identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b, int p);
Vec mat_vec(const Mat& m, const Vec& v, int p);
Mat transpose(const Mat& m);

// In-place reduction to reduced row-echelon form; returns the rank.
// Zero rows are removed.
std::size_t rref(Mat& m, int p);

std::size_t rank(Mat m, int p);

// Dot product of two vectors.
std::uint8_t dot(const Vec& a, const Vec& b, int p);

}  // namespace flagorbits::gfp
