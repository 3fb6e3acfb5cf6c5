#pragma once

#include <span>
#include <string>
#include <vector>

#include "uilab/common.hpp"

namespace uilab {

// Feature-hashed bag-of-tokens embedding: tokenize on non-alphanumerics,
// bucket each token by hash, count, L2-normalize. Entries are nonnegative,
// so cosine similarity of two embeddings is always in [0, 1].
class Embedder {
public:
    explicit Embedder(int dim = 256) : dim_(dim) {}

    int dim() const { return dim_; }
    std::vector<double> embed(const std::string& text) const;
    size_t token_bucket(const std::string& token) const;

    // Zero vectors have undefined direction; their similarity is 0 by
    // convention, which makes "never seen anything like it" maximally novel.
    static double cosine(std::span<const double> a, std::span<const double> b);

private:
    int dim_;
};

std::vector<std::string> tokenize(const std::string& text);

}  // namespace uilab
