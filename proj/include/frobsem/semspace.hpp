#ifndef FROBSEM_SEMSPACE_HPP
#define FROBSEM_SEMSPACE_HPP

// Co-occurrence semantic spaces built from lemmatized, POS-tagged corpora.
//
// Corpus text is one sentence per line, tokens written `lemma_POS` and
// separated by spaces. Counting windows never cross a sentence boundary.

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "frobsem/linalg.hpp"

namespace frobsem {

enum class Pos { Noun, Verb, Adj, Adv, Other };

std::string_view to_string(Pos pos);
Pos parse_pos(std::string_view s);

struct Token {
  std::string lemma;
  Pos pos = Pos::Other;

  // Validates that the lemma is non-empty and lowercase (FormatError).
  static Token make(std::string lemma, Pos pos);
  // Parses `lemma_POS`, splitting at the last underscore.
  static Token parse(std::string_view text);

  std::string str() const;
  bool content() const noexcept { return pos != Pos::Other; }

  auto operator<=>(const Token&) const = default;
  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

Sentence parse_sentence(std::string_view line);
// Blank lines are kept as empty sentences so line numbers remain sentence ids.
std::vector<Sentence> read_corpus(const std::string& path);

enum class Weighting { Raw, Ratio, Pmi, Lmi };

std::string_view to_string(Weighting w);
Weighting parse_weighting(std::string_view s);

struct CooccurrenceCounts {
  std::vector<Token> basis;
  std::size_t window = 0;
  // Unigram counts for every token seen, function words included.
  std::map<Token, std::uint64_t> unigram;
  // Per content-word target, co-occurrence counts indexed like `basis`.
  std::map<Token, std::vector<std::uint64_t>> pairs;
  std::uint64_t total = 0;

  std::uint64_t count(const Token& context, const Token& target) const;
  std::uint64_t count(const Token& token) const;
};

struct CountOptions {
  std::size_t window = 5;
  unsigned threads = 1;
};

// Throws EmptyCorpus when the corpus has no tokens, InvalidArgument when
// window is zero or the basis has duplicates.
CooccurrenceCounts count_cooccurrences(std::span<const Sentence> corpus, std::span<const Token> basis,
                                       const CountOptions& options);

// Top-k content tokens by frequency, ties broken by token order; stop-listed
// tokens are skipped.
std::vector<Token> select_basis(std::span<const Sentence> corpus, std::size_t k,
                                const std::vector<Token>& stoplist = {});

class SemanticSpace {
 public:
  SemanticSpace() = default;
  // Throws DimensionMismatch if any vector differs in size from the basis,
  // InvalidArgument on duplicate basis tokens.
  SemanticSpace(std::vector<Token> basis, std::map<Token, Vector> vocab, Weighting weighting,
                std::size_t window);

  const std::vector<Token>& basis() const noexcept { return basis_; }
  const std::map<Token, Vector>& vocab() const noexcept { return vocab_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  Weighting weighting() const noexcept { return weighting_; }
  std::size_t window() const noexcept { return window_; }

  bool contains(const Token& t) const { return vocab_.count(t) != 0; }
  const Vector* find(const Token& t) const;
  // Throws MissingWord.
  const Vector& at(const Token& t) const;

  bool operator==(const SemanticSpace&) const = default;

 private:
  std::vector<Token> basis_;
  std::map<Token, Vector> vocab_;
  Weighting weighting_ = Weighting::Raw;
  std::size_t window_ = 0;
};

// RATIO: count(c,t) * total / (count(t) * count(c)); PMI: ln RATIO, 0 where
// the count is zero; LMI: count(c,t) * PMI. Throws InvalidArgument when
// total is zero.
SemanticSpace weight(const CooccurrenceCounts& counts, Weighting scheme);

struct ContextVector {
  Vector vector;
  std::size_t source_id = 0;
};

// Mean of the in-vocabulary content-word vectors among `tokens`, skipping
// every occurrence of `exclude`. Zero vector when nothing qualifies.
ContextVector context_vector(const SemanticSpace& space, std::span<const Token> tokens, const Token& exclude,
                             std::size_t source_id = 0);

std::string serialize_space(const SemanticSpace& space);
SemanticSpace parse_space(const std::vector<std::string>& lines);
void save_space(const SemanticSpace& space, const std::string& path);
SemanticSpace load_space(const std::string& path);

}  // namespace frobsem

#endif  // FROBSEM_SEMSPACE_HPP
