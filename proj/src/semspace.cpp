#include "frobsem/semspace.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <thread>
#include <unordered_map>

#include "frobsem/textio.hpp"

namespace frobsem {

std::string_view to_string(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

Pos parse_pos(std::string_view s) {
  if (s == "NOUN") return Pos::Noun;
  if (s == "VERB") return Pos::Verb;
  if (s == "ADJ") return Pos::Adj;
  if (s == "ADV") return Pos::Adv;
  if (s == "OTHER") return Pos::Other;
  throw Error(ErrorCode::FormatError, "unknown POS tag '" + std::string(s) + "'");
}

Token Token::make(std::string lemma, Pos pos) {
  if (lemma.empty()) throw Error(ErrorCode::FormatError, "empty lemma");
  for (unsigned char c : lemma)
    if (std::isupper(c)) throw Error(ErrorCode::FormatError, "lemma must be lowercase: '" + lemma + "'");
  return Token{std::move(lemma), pos};
}

Token Token::parse(std::string_view text) {
  const auto cut = text.rfind('_');
  if (cut == std::string_view::npos || cut == 0 || cut + 1 == text.size())
    throw Error(ErrorCode::FormatError, "token must look like lemma_POS: '" + std::string(text) + "'");
  return make(std::string(text.substr(0, cut)), parse_pos(text.substr(cut + 1)));
}

std::string Token::str() const { return lemma + "_" + std::string(to_string(pos)); }

Sentence parse_sentence(std::string_view line) {
  Sentence s;
  for (auto field : textio::split(line, " \t")) s.push_back(Token::parse(field));
  return s;
}

std::vector<Sentence> read_corpus(const std::string& path) {
  std::vector<Sentence> corpus;
  const auto lines = textio::read_lines(path);
  corpus.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      corpus.push_back(parse_sentence(lines[i]));
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(i + 1) + ": " + e.detail());
    }
  }
  return corpus;
}

std::string_view to_string(Weighting w) {
  switch (w) {
    case Weighting::Raw: return "RAW";
    case Weighting::Ratio: return "RATIO";
    case Weighting::Pmi: return "PMI";
    case Weighting::Lmi: return "LMI";
  }
  return "RAW";
}

Weighting parse_weighting(std::string_view s) {
  std::string up(s);
  for (auto& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "RAW") return Weighting::Raw;
  if (up == "RATIO") return Weighting::Ratio;
  if (up == "PMI") return Weighting::Pmi;
  if (up == "LMI") return Weighting::Lmi;
  throw Error(ErrorCode::FormatError, "unknown weighting '" + std::string(s) + "'");
}

// -- counting -------------------------------------------------------------------

std::uint64_t CooccurrenceCounts::count(const Token& context, const Token& target) const {
  auto b = std::find(basis.begin(), basis.end(), context);
  if (b == basis.end()) return 0;
  auto it = pairs.find(target);
  if (it == pairs.end()) return 0;
  return it->second[static_cast<std::size_t>(b - basis.begin())];
}

std::uint64_t CooccurrenceCounts::count(const Token& token) const {
  auto it = unigram.find(token);
  return it == unigram.end() ? 0 : it->second;
}

namespace {

struct ShardCounts {
  std::map<Token, std::uint64_t> unigram;
  std::map<Token, std::vector<std::uint64_t>> pairs;
  std::uint64_t total = 0;
};

void count_shard(std::span<const Sentence> sentences, const std::map<Token, std::size_t>& basis_index,
                 std::size_t window, ShardCounts& out) {
  const std::size_t dim = basis_index.size();
  std::vector<long> context_of;
  for (const auto& sentence : sentences) {
    out.total += sentence.size();
    context_of.assign(sentence.size(), -1);
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      ++out.unigram[sentence[i]];
      auto b = basis_index.find(sentence[i]);
      if (b != basis_index.end()) context_of[i] = static_cast<long>(b->second);
    }
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (!sentence[i].content()) continue;
      auto& row = out.pairs[sentence[i]];
      if (row.empty()) row.assign(dim, 0);
      const std::size_t lo = i >= window ? i - window : 0;
      const std::size_t hi = std::min(sentence.size() - 1, i + window);
      for (std::size_t j = lo; j <= hi; ++j) {
        if (j == i || context_of[j] < 0) continue;
        ++row[static_cast<std::size_t>(context_of[j])];
      }
    }
  }
}

}  // namespace

CooccurrenceCounts count_cooccurrences(std::span<const Sentence> corpus, std::span<const Token> basis,
                                       const CountOptions& options) {
  if (options.window == 0) throw Error(ErrorCode::InvalidArgument, "window must be at least 1");
  std::map<Token, std::size_t> basis_index;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!basis_index.emplace(basis[i], i).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate basis token " + basis[i].str());

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(corpus.size())));
  std::vector<ShardCounts> shards(threads);
  const std::size_t per = (corpus.size() + threads - 1) / std::max<std::size_t>(threads, 1);
  if (threads == 1) {
    count_shard(corpus, basis_index, options.window, shards[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = std::min(corpus.size(), t * per);
      const std::size_t end = std::min(corpus.size(), begin + per);
      workers.emplace_back(count_shard, corpus.subspan(begin, end - begin), std::cref(basis_index),
                           options.window, std::ref(shards[t]));
    }
    for (auto& w : workers) w.join();
  }

  CooccurrenceCounts out;
  out.basis.assign(basis.begin(), basis.end());
  out.window = options.window;
  // Merge in shard order; integer sums make the result thread-count independent.
  for (auto& shard : shards) {
    out.total += shard.total;
    for (const auto& [tok, n] : shard.unigram) out.unigram[tok] += n;
    for (auto& [tok, row] : shard.pairs) {
      auto& dst = out.pairs[tok];
      if (dst.empty()) {
        dst = std::move(row);
      } else {
        for (std::size_t i = 0; i < row.size(); ++i) dst[i] += row[i];
      }
    }
  }
  if (out.total == 0) throw Error(ErrorCode::EmptyCorpus, "corpus contains no tokens");
  return out;
}

std::vector<Token> select_basis(std::span<const Sentence> corpus, std::size_t k, const std::vector<Token>& stoplist) {
  std::map<Token, std::uint64_t> freq;
  const std::set<Token> stop(stoplist.begin(), stoplist.end());
  for (const auto& s : corpus)
    for (const auto& t : s)
      if (t.content() && !stop.count(t)) ++freq[t];
  std::vector<std::pair<Token, std::uint64_t>> ranked(freq.begin(), freq.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<Token> basis;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) basis.push_back(ranked[i].first);
  return basis;
}

// -- space --------------------------------------------------------------------

SemanticSpace::SemanticSpace(std::vector<Token> basis, std::map<Token, Vector> vocab, Weighting weighting,
                             std::size_t window)
    : basis_(std::move(basis)), vocab_(std::move(vocab)), weighting_(weighting), window_(window) {
  std::set<Token> seen;
  for (const auto& t : basis_)
    if (!seen.insert(t).second) throw Error(ErrorCode::InvalidArgument, "duplicate basis token " + t.str());
  for (const auto& [tok, vec] : vocab_)
    if (vec.dim() != basis_.size())
      throw Error(ErrorCode::DimensionMismatch, "vector for " + tok.str() + " has dim " + std::to_string(vec.dim()) +
                                                     ", basis has " + std::to_string(basis_.size()));
}

const Vector* SemanticSpace::find(const Token& t) const {
  auto it = vocab_.find(t);
  return it == vocab_.end() ? nullptr : &it->second;
}

const Vector& SemanticSpace::at(const Token& t) const {
  if (const Vector* v = find(t)) return *v;
  throw Error(ErrorCode::MissingWord, t.str() + " is not in the semantic space");
}

SemanticSpace weight(const CooccurrenceCounts& counts, Weighting scheme) {
  if (counts.total == 0) throw Error(ErrorCode::InvalidArgument, "total token count is zero");
  const std::size_t dim = counts.basis.size();
  std::vector<double> context_freq(dim);
  for (std::size_t i = 0; i < dim; ++i) context_freq[i] = static_cast<double>(counts.count(counts.basis[i]));
  const double total = static_cast<double>(counts.total);

  std::map<Token, Vector> vocab;
  for (const auto& [target, row] : counts.pairs) {
    const double target_freq = static_cast<double>(counts.count(target));
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const double c = static_cast<double>(row[i]);
      if (c == 0.0) continue;
      const double ratio = c * total / (target_freq * context_freq[i]);
      switch (scheme) {
        case Weighting::Raw: v[i] = c; break;
        case Weighting::Ratio: v[i] = ratio; break;
        case Weighting::Pmi: v[i] = std::log(ratio); break;
        case Weighting::Lmi: v[i] = c * std::log(ratio); break;
      }
    }
    vocab.emplace(target, std::move(v));
  }
  return SemanticSpace(counts.basis, std::move(vocab), scheme, counts.window);
}

ContextVector context_vector(const SemanticSpace& space, std::span<const Token> tokens, const Token& exclude,
                             std::size_t source_id) {
  Vector acc(space.dim());
  std::size_t n = 0;
  for (const auto& t : tokens) {
    if (t == exclude || !t.content()) continue;
    if (const Vector* v = space.find(t)) {
      acc = acc + *v;
      ++n;
    }
  }
  if (n > 0) acc = (1.0 / static_cast<double>(n)) * acc;
  return ContextVector{std::move(acc), source_id};
}

// -- persistence -----------------------------------------------------------------

std::string serialize_space(const SemanticSpace& space) {
  std::string out = "frobsem-space v1 " + std::to_string(space.dim()) + " " + std::string(to_string(space.weighting())) +
                    " " + std::to_string(space.window()) + "\n";
  for (std::size_t i = 0; i < space.basis().size(); ++i) {
    if (i) out.push_back(' ');
    out += space.basis()[i].str();
  }
  out.push_back('\n');
  for (const auto& [tok, vec] : space.vocab()) {
    out += tok.str();
    out.push_back('\t');
    out += textio::join_doubles(vec.entries());
    out.push_back('\n');
  }
  return out;
}

SemanticSpace parse_space(const std::vector<std::string>& lines) {
  if (lines.empty()) throw Error(ErrorCode::FormatError, "empty space file");
  const auto header = textio::split(lines[0], " ");
  if (header.size() != 5 || header[0] != "frobsem-space" || header[1] != "v1")
    throw Error(ErrorCode::FormatError, "bad space header: '" + lines[0] + "'");
  const auto dim = static_cast<std::size_t>(textio::parse_int(header[2]));
  const Weighting weighting = parse_weighting(header[3]);
  const auto window = static_cast<std::size_t>(textio::parse_int(header[4]));
  if (lines.size() < 2) throw Error(ErrorCode::FormatError, "missing basis line");

  std::vector<Token> basis;
  for (auto field : textio::split(lines[1], " ")) basis.push_back(Token::parse(field));
  if (basis.size() != dim)
    throw Error(ErrorCode::FormatError, "basis has " + std::to_string(basis.size()) + " tokens, header says " +
                                             std::to_string(dim));

  std::map<Token, Vector> vocab;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    if (textio::trim(lines[i]).empty()) continue;
    const auto tab = lines[i].find('\t');
    if (tab == std::string::npos) throw Error(ErrorCode::FormatError, "line " + std::to_string(i + 1) + ": no tab");
    Token tok = Token::parse(std::string_view(lines[i]).substr(0, tab));
    Vector vec = textio::parse_vector(std::string_view(lines[i]).substr(tab + 1));
    if (vec.dim() != dim)
      throw Error(ErrorCode::FormatError, "line " + std::to_string(i + 1) + ": expected " + std::to_string(dim) +
                                               " columns, found " + std::to_string(vec.dim()));
    if (!vocab.emplace(std::move(tok), std::move(vec)).second)
      throw Error(ErrorCode::FormatError, "line " + std::to_string(i + 1) + ": duplicate entry");
  }
  try {
    return SemanticSpace(std::move(basis), std::move(vocab), weighting, window);
  } catch (const Error& e) {
    throw Error(ErrorCode::FormatError, e.detail());
  }
}

void save_space(const SemanticSpace& space, const std::string& path) { textio::write_file(path, serialize_space(space)); }

SemanticSpace load_space(const std::string& path) { return parse_space(textio::read_lines(path)); }

}  // namespace frobsem
