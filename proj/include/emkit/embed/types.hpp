#pragma once

#include <cstddef>
#include <vector>

namespace emkit::embed {

enum class Role { query, passage };

using DenseVector = std::vector<float>;

// One vector per token; uniform dims, never empty.
struct MultiVector {
  std::vector<DenseVector> token_vectors;
  size_t dims() const {
    return token_vectors.empty() ? 0 : token_vectors.front().size();
  }
};

double dot(const DenseVector& a, const DenseVector& b);
double l2_norm(const DenseVector& v);
// Normalizes in place; zero vectors stay zero.
void l2_normalize(DenseVector& v);
double cosine(const DenseVector& a, const DenseVector& b);

}  // namespace emkit::embed
