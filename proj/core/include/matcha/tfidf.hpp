#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matcha/detectors.hpp"

namespace matcha {

struct TfIdfStats {
  std::string term;
  std::map<int, double> per_document_tfidf;  // doc index -> score
  int total_documents = 0;                   // N
  int document_frequency = 0;                // df
  double avg_over_flagged_docs = 0.0;
};

struct MiningDocument {
  std::string name;
  std::string text;  // Java source
};

struct MiningResult {
  std::vector<std::pair<std::string, double>> ranked;  // term -> avg tf-idf
  std::vector<TfIdfStats> stats;                       // per ranked term
  int flagged_documents = 0;
  bool empty_flagged_set = false;  // no document contains an access API call
};

/// Tokenization used for mining: identifier tokens split on camelCase /
/// underscore / digit boundaries, lowercased. One file = one document.
std::vector<std::string> mining_tokens(const std::string& java_source);

/// tf = term count / document token count; idf = ln(N / df). The average is
/// taken over the flagged documents (those containing access API calls),
/// counting 0 for documents that lack the term. Ranked terms are the ones
/// appearing in at least one flagged document; ties break lexicographically.
MiningResult mine_keywords(const std::vector<MiningDocument>& corpus,
                           const ApiList& api_list, size_t top_k);

}  // namespace matcha
