#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "condensa/analyzer.hpp"
#include "condensa/matrix.hpp"

namespace condensa {

/// Dense term-by-sentence matrix of one document. Row i carries vocabulary
/// term i, column j sentence j (all sentences keep a column so indices line
/// up; sentences without weighted terms are zero columns). Entries are the
/// sentence tf-idf weights of `sentence_vectors`.
struct TermSentenceMatrix {
    std::vector<std::string> terms;
    Matrix matrix;
};

/// Reduced sentence space of one document: the SVD spectrum, the right
/// singular vectors, the retained rank q and the q x m sentence
/// representations Sigma_q * Vq^T.
struct LsaSpace {
    std::vector<double> singular_values;
    Matrix right_vectors;  // r x m, rows of V^T
    std::size_t rank_q = 0;
    Matrix sentence_reps;  // q x m
};

/// Throws DegenerateDocumentError when fewer than two sentences carry terms
/// or every weight is annihilated by the sentence-level idf.
TermSentenceMatrix term_sentence_matrix(const Document& doc);

/// Decomposes the term-sentence matrix and keeps the smallest rank q whose
/// energy (sum of sigma^2) reaches `energy` of the total, floored at 2 when
/// at least two singular values exist.
LsaSpace build_lsa_space(const Document& doc, double energy = 0.9);

/// Cosine of columns i and j of the reduced representations, clamped to
/// [0,1]; zero columns score 0. Throws IndexOutOfRangeError.
double lsa_similarity(const LsaSpace& space, std::size_t i, std::size_t j);

}  // namespace condensa
