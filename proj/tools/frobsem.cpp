// Command-line front end: corpus to space, tensors, senses, composition and
// evaluation, plus the two worked demos.

#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobsem/compose.hpp"
#include "frobsem/demo.hpp"
#include "frobsem/disamb.hpp"
#include "frobsem/pipeline.hpp"
#include "frobsem/regress.hpp"
#include "frobsem/semspace.hpp"
#include "frobsem/senses.hpp"
#include "frobsem/tensorize.hpp"
#include "frobsem/textio.hpp"

namespace {

using namespace frobsem;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    textio::write_file(out_path, text);
}

std::vector<Token> read_token_list(const std::string& path) {
  std::vector<Token> out;
  for (const auto& line : textio::read_lines(path))
    for (auto field : textio::split(line, " \t"))
      if (field.front() != '#') out.push_back(Token::parse(field));
  return out;
}

std::vector<Token> dataset_words(const SentencePairDataset& data) {
  std::set<Token> seen;
  std::vector<Token> out;
  for (const auto& e : data.entries)
    for (const auto* s : {&e.first, &e.second})
      for (const auto& rt : *s)
        if (seen.insert(rt.token).second) out.push_back(rt.token);
  return out;
}

struct Common {
  std::string space;
  std::string tensors;
  std::string senses;
  std::string model = "copy_object";
  bool disambiguate = false;
  std::string metric = "cosine";
  std::string linkage = "ward";
  std::string coord = "frobenius";
  std::uint64_t seed = 0;
  bool seeded = false;
  std::size_t window = 5;
  std::string weighting = "pmi";
  std::string aggregate = "raw";
  unsigned threads = 1;
  std::string out;
};

CoordMode parse_coord(const std::string& s) {
  if (s == "frobenius") return CoordMode::Frobenius;
  if (s == "additive") return CoordMode::Additive;
  throw Error(ErrorCode::InvalidArgument, "unknown coordination mode '" + s + "'");
}

PipelineConfig pipeline_config(const Common& c) {
  PipelineConfig cfg;
  cfg.model = parse_model(c.model);
  cfg.disambiguate = c.disambiguate;
  cfg.coord = parse_coord(c.coord);
  cfg.aggregate = parse_aggregate(c.aggregate);
  cfg.threads = c.threads;
  return cfg;
}

int cmd_build_space(const Common& c, const std::string& corpus_path, std::size_t basis_size,
                    const std::string& stoplist_path) {
  const auto corpus = read_corpus(corpus_path);
  const auto stoplist = stoplist_path.empty() ? std::vector<Token>{} : read_token_list(stoplist_path);
  const auto basis = select_basis(corpus, basis_size, stoplist);
  const auto counts = count_cooccurrences(corpus, basis, CountOptions{c.window, c.threads});
  const auto space = weight(counts, parse_weighting(c.weighting));
  emit(serialize_space(space), c.out);
  std::cerr << "space: " << space.vocab().size() << " words, " << space.dim() << " dimensions\n";
  return 0;
}

int cmd_build_tensors(const Common& c, const std::string& occurrences_path) {
  const auto space = load_space(c.space);
  const auto groups = group_occurrences(read_occurrences(occurrences_path));
  InventoryMap inventories;
  if (!c.senses.empty()) inventories = index_inventories(load_inventories(c.senses));
  TensorLexicon lex;
  for (const auto& occ : groups) {
    const VerbTensor t = build_tensor(space, occ);
    if (t.skipped_rows > 0)
      std::cerr << t.word.str() << ": skipped " << t.skipped_rows << " rows with unknown arguments\n";
    lex.add(t);
    auto inv = inventories.find(occ.word());
    if (inv != inventories.end() && t.provenance.kind == ProvenanceKind::Summed)
      lex.add_senses(train_sense_tensors(space, occ, inv->second));
  }
  emit(serialize_lexicon(lex), c.out);
  std::cerr << "tensors: " << lex.tensors().size() << " words, " << lex.senses().size() << " with sense tensors\n";
  return 0;
}

int cmd_induce_senses(const Common& c, const std::string& corpus_path, const std::string& words_path,
                      const std::string& dataset_path) {
  const auto space = load_space(c.space);
  const auto corpus = read_corpus(corpus_path);
  std::vector<Token> words;
  if (!words_path.empty()) words = read_token_list(words_path);
  if (!dataset_path.empty()) {
    const auto more = dataset_words(read_dataset(dataset_path));
    words.insert(words.end(), more.begin(), more.end());
  }
  if (words.empty()) throw Error(ErrorCode::InvalidArgument, "no target words: pass --words or --dataset");
  const Linkage linkage = parse_linkage(c.linkage);
  const Metric metric = parse_metric(c.metric);
  std::vector<SenseInventory> inventories;
  std::set<Token> done;
  for (const auto& w : words) {
    if (!done.insert(w).second) continue;
    const auto contexts = collect_contexts(space, corpus, w);
    inventories.push_back(induce_senses(w, contexts, linkage, metric));
    const auto& inv = inventories.back();
    std::cerr << w.str() << ": " << contexts.size() << " contexts, " << inv.k << " senses"
              << (inv.near_duplicate ? " (near-duplicate centroids)" : "") << "\n";
  }
  emit(serialize_inventories(inventories), c.out);
  return 0;
}

int cmd_disambiguate(const Common& c, const std::string& sentence_text) {
  const auto space = load_space(c.space);
  const auto inventories = index_inventories(load_inventories(c.senses));
  TensorLexicon lex;
  std::vector<SentenceWord> words;
  for (const auto& t : parse_sentence(sentence_text)) words.push_back({t, 0});
  std::string out;
  for (const auto& d : disambiguate_sentence(space, words, inventories, lex))
    out += d.token.str() + "\t" + std::to_string(d.chosen_sense) + "\n";
  emit(out, c.out);
  return 0;
}

int cmd_train_regression(const Common& c, const std::string& pairs_path, double lambda, double lr,
                         std::size_t epochs) {
  auto [inputs, targets] = read_training_pairs(pairs_path);
  RegressionProblem p{std::move(inputs), std::move(targets), {}};
  p.options.lambda = lambda;
  p.options.lr = lr;
  p.options.epochs = epochs;
  if (c.seeded) p.options.shuffle_seed = c.seed;
  const auto trained = train_matrix(p);
  std::string out;
  for (std::size_t i = 0; i < trained.w.rows(); ++i) out += textio::join_doubles(trained.w.row(i).entries()) + "\n";
  emit(out, c.out);
  std::cerr << "final loss " << textio::format_double(trained.loss) << " after " << trained.epochs << " steps\n";
  return 0;
}

std::string format_result(const CompositionResult& r) {
  if (r.kind() == CompositionResult::Kind::Vector) return textio::join_doubles(std::get<Vector>(r.payload).entries()) + "\n";
  const auto& m = std::get<Matrix>(r.payload);
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) out += textio::join_doubles(m.row(i).entries()) + "\n";
  return out;
}

int cmd_compose(const Common& c, const std::string& sentence_text) {
  const auto space = load_space(c.space);
  TensorLexicon lex;
  if (!c.tensors.empty()) lex = load_lexicon(c.tensors);
  InventoryMap inventories;
  if (!c.senses.empty()) inventories = index_inventories(load_inventories(c.senses));
  const PipelineResources res{space, lex, c.senses.empty() ? nullptr : &inventories};
  emit(format_result(compose_sentence(parse_tagged_sentence(sentence_text), res, pipeline_config(c))), c.out);
  return 0;
}

int cmd_eval(const Common& c, const std::string& dataset_path) {
  const auto space = load_space(c.space);
  TensorLexicon lex;
  if (!c.tensors.empty()) lex = load_lexicon(c.tensors);
  InventoryMap inventories;
  if (!c.senses.empty()) inventories = index_inventories(load_inventories(c.senses));
  const PipelineResources res{space, lex, c.senses.empty() ? nullptr : &inventories};
  emit(format_report(run_pipeline(read_dataset(dataset_path), res, pipeline_config(c))), c.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius compositional distributional semantics toolkit"};
  app.require_subcommand(1);
  Common c;

  auto add_out = [&](CLI::App* sub) { sub->add_option("-o,--out", c.out, "Output file (default stdout)"); };
  auto add_space = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--space", c.space, "Semantic space file");
    if (required) opt->required();
  };
  auto add_threads = [&](CLI::App* sub) { sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::PositiveNumber); };

  auto* build_space = app.add_subcommand("build-space", "Count co-occurrences in a lemma_POS corpus and weight them");
  std::string corpus_path, stoplist_path;
  std::size_t basis_size = 2000;
  build_space->add_option("--corpus", corpus_path, "Corpus, one sentence per line")->required();
  build_space->add_option("--basis-size", basis_size, "Number of context words")->check(CLI::PositiveNumber);
  build_space->add_option("--stoplist", stoplist_path, "Tokens never used as context words");
  build_space->add_option("--window", c.window, "Tokens on each side")->check(CLI::PositiveNumber);
  build_space->add_option("--weighting", c.weighting, "raw|ratio|pmi|lmi");
  add_threads(build_space);
  add_out(build_space);

  auto* build_tensors = app.add_subcommand("build-tensors", "Sum argument tensors of relational words");
  std::string occurrences_path;
  add_space(build_tensors, true);
  build_tensors->add_option("--occurrences", occurrences_path, "Argument occurrence file")->required();
  build_tensors->add_option("--senses", c.senses, "Sense inventories; adds one tensor per sense");
  add_out(build_tensors);

  auto* induce = app.add_subcommand("induce-senses", "Cluster the contexts of words into senses");
  std::string words_path, induce_dataset;
  add_space(induce, true);
  induce->add_option("--corpus", corpus_path, "Corpus, one sentence per line")->required();
  induce->add_option("--words", words_path, "File of lemma_POS target words");
  induce->add_option("--dataset", induce_dataset, "Take the target words from a dataset");
  induce->add_option("--metric", c.metric, "euclidean|cosine|correlation");
  induce->add_option("--linkage", c.linkage, "complete|ward");
  add_out(induce);

  auto* disamb = app.add_subcommand("disambiguate", "Choose a sense for each word of a sentence");
  std::string sentence_text;
  add_space(disamb, true);
  disamb->add_option("--senses", c.senses, "Sense inventories")->required();
  disamb->add_option("sentence", sentence_text, "Space-separated lemma_POS tokens")->required();
  add_out(disamb);

  auto* regress = app.add_subcommand("train-regression", "Learn a verb matrix from argument/holistic vector pairs");
  std::string pairs_path;
  double lambda = 0.0, lr = 0.1;
  std::size_t epochs = 1000;
  regress->add_option("--pairs", pairs_path, "arg<TAB>target vector pairs")->required();
  regress->add_option("--lambda", lambda, "Ridge penalty")->check(CLI::NonNegativeNumber);
  regress->add_option("--lr", lr, "Initial learning rate")->check(CLI::PositiveNumber);
  regress->add_option("--epochs", epochs, "Maximum descent steps")->check(CLI::PositiveNumber);
  auto* seed_opt = regress->add_option("--seed", c.seed, "Shuffle the rows with this seed");
  add_out(regress);

  auto add_model_flags = [&](CLI::App* sub) {
    add_space(sub, true);
    sub->add_option("--tensors", c.tensors, "Tensor lexicon");
    sub->add_option("--senses", c.senses, "Sense inventories (needed with --disambiguate)");
    sub->add_option("--model", c.model,
                    "verbs_only|additive|multiplicative|relational|copy_subject|copy_object|frobenius_additive");
    sub->add_flag("--disambiguate", c.disambiguate, "Pick word senses before composing");
    sub->add_option("--coord", c.coord, "frobenius|additive");
    add_out(sub);
  };

  auto* compose = app.add_subcommand("compose", "Compose one role-tagged sentence");
  add_model_flags(compose);
  compose->add_option("sentence", sentence_text, "ROLE=lemma_POS;...")->required();

  auto* eval = app.add_subcommand("eval", "Score a sentence-pair dataset");
  std::string dataset_path;
  add_model_flags(eval);
  eval->add_option("--dataset", dataset_path, "Sentence-pair dataset")->required();
  eval->add_option("--aggregate", c.aggregate, "raw|mean");
  add_threads(eval);

  auto* demo_q = app.add_subcommand("demo-quantum", "Density-matrix example with an ambiguous 'bank'");
  auto* demo_t = app.add_subcommand("demo-truth", "Copy-Subject as set membership");

  CLI11_PARSE(app, argc, argv);
  c.seeded = seed_opt->count() > 0;

  try {
    if (*build_space) return cmd_build_space(c, corpus_path, basis_size, stoplist_path);
    if (*build_tensors) return cmd_build_tensors(c, occurrences_path);
    if (*induce) return cmd_induce_senses(c, corpus_path, words_path, induce_dataset);
    if (*disamb) return cmd_disambiguate(c, sentence_text);
    if (*regress) return cmd_train_regression(c, pairs_path, lambda, lr, epochs);
    if (*compose) return cmd_compose(c, sentence_text);
    if (*eval) return cmd_eval(c, dataset_path);
    if (*demo_q) {
      std::cout << format_quantum_demo(run_quantum_demo());
      return 0;
    }
    if (*demo_t) {
      const auto d = run_truth_demo();
      std::cout << format_truth_demo(d);
      return d.failures == 0 ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
