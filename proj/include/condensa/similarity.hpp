#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "condensa/analyzer.hpp"

namespace condensa {

/// The distinct stems of a sentence.
using TermSet = std::set<std::string>;

/// Sparse sentence vector of tf-idf weights; zero entries are never stored.
struct SentenceVector {
    std::map<std::string, double> weights;
};

TermSet term_set(const Sentence& s);

/// Overlap coefficient |a&b| / min(|a|,|b|). Despite the usual name this is
/// not union-denominator Jaccard: any subset pair scores 1. Throws
/// EmptySetError when either set is empty.
double jaccard_overlap(const TermSet& a, const TermSet& b);

/// One vector per sentence. The weight of term n in sentence i is
/// (1 + log10 f_ni) * log10(Ns / sdf_n) with f_ni the in-sentence frequency,
/// Ns the document's sentence count and sdf_n the number of sentences
/// containing n. Terms present in every sentence weigh 0 and are dropped.
std::vector<SentenceVector> sentence_vectors(const Document& doc);

/// Cosine similarity; 0 when either vector has zero norm.
double cosine(const SentenceVector& u, const SentenceVector& v);

}  // namespace condensa
