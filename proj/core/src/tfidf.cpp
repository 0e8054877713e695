#include "matcha/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "matcha/java_parser.hpp"

namespace matcha {

std::vector<std::string> mining_tokens(const std::string& java_source) {
  java::CompilationUnit unit = java::parse_unit(java_source, "<mining>");
  std::vector<std::string> words;
  for (const Span& id : unit.identifiers) {
    std::string normalized = java::normalize_identifier(
        std::string_view(java_source).substr(id.begin, id.length()));
    std::istringstream split(normalized);
    std::string word;
    while (split >> word) words.push_back(word);
  }
  return words;
}

MiningResult mine_keywords(const std::vector<MiningDocument>& corpus,
                           const ApiList& api_list, size_t top_k) {
  MiningResult result;
  const int n_docs = static_cast<int>(corpus.size());
  std::vector<std::map<std::string, int>> counts(corpus.size());
  std::vector<int> doc_tokens(corpus.size(), 0);
  std::vector<bool> flagged(corpus.size(), false);

  AnnotationGraph empty_graph;
  for (size_t d = 0; d < corpus.size(); ++d) {
    for (std::string& word : mining_tokens(corpus[d].text)) {
      counts[d][word]++;
      doc_tokens[d]++;
    }
    std::vector<java::CompilationUnit> units;
    units.push_back(java::parse_unit(corpus[d].text, corpus[d].name));
    for (const DetectedCall& call : detect_api_calls(units, empty_graph, api_list)) {
      if (call.spec->kind == ApiKind::Access) {
        flagged[d] = true;
        break;
      }
    }
    if (flagged[d]) result.flagged_documents++;
  }
  if (result.flagged_documents == 0) {
    result.empty_flagged_set = true;
    return result;
  }

  std::map<std::string, int> df;
  for (const auto& doc_counts : counts) {
    for (const auto& [term, count] : doc_counts) df[term]++;
  }

  std::set<std::string> flagged_terms;
  for (size_t d = 0; d < corpus.size(); ++d) {
    if (!flagged[d]) continue;
    for (const auto& [term, count] : counts[d]) flagged_terms.insert(term);
  }

  std::vector<TfIdfStats> stats;
  for (const std::string& term : flagged_terms) {
    TfIdfStats s;
    s.term = term;
    s.total_documents = n_docs;
    s.document_frequency = df[term];
    double idf = std::log(static_cast<double>(n_docs) / s.document_frequency);
    double sum = 0.0;
    for (size_t d = 0; d < corpus.size(); ++d) {
      auto it = counts[d].find(term);
      if (it == counts[d].end() || doc_tokens[d] == 0) continue;
      double tf = static_cast<double>(it->second) / doc_tokens[d];
      double score = tf * idf;
      s.per_document_tfidf[static_cast<int>(d)] = score;
      if (flagged[d]) sum += score;
    }
    s.avg_over_flagged_docs = sum / result.flagged_documents;
    stats.push_back(std::move(s));
  }

  std::sort(stats.begin(), stats.end(), [](const TfIdfStats& a, const TfIdfStats& b) {
    if (a.avg_over_flagged_docs != b.avg_over_flagged_docs)
      return a.avg_over_flagged_docs > b.avg_over_flagged_docs;
    return a.term < b.term;
  });
  if (stats.size() > top_k) stats.resize(top_k);
  for (const TfIdfStats& s : stats) {
    result.ranked.emplace_back(s.term, s.avg_over_flagged_docs);
  }
  result.stats = std::move(stats);
  return result;
}

}  // namespace matcha
