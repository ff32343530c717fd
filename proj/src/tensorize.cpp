#include "frobsem/tensorize.hpp"

#include <algorithm>

#include "frobsem/textio.hpp"

namespace frobsem {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::Subj: return "SUBJ";
    case Role::Obj: return "OBJ";
    case Role::Iobj: return "IOBJ";
    case Role::Dobj: return "DOBJ";
    case Role::ModifiedVerb: return "MODIFIED_VERB";
    case Role::NounHead: return "NOUN_HEAD";
    case Role::BareInf: return "BARE_INF";
    case Role::Prep: return "PREP";
  }
  return "SUBJ";
}

Role parse_role(std::string_view s) {
  static const std::pair<std::string_view, Role> kRoles[] = {
      {"SUBJ", Role::Subj},         {"OBJ", Role::Obj},          {"IOBJ", Role::Iobj},
      {"DOBJ", Role::Dobj},         {"MODIFIED_VERB", Role::ModifiedVerb},
      {"NOUN_HEAD", Role::NounHead}, {"BARE_INF", Role::BareInf}, {"PREP", Role::Prep},
  };
  for (const auto& [name, role] : kRoles)
    if (name == s) return role;
  throw Error(ErrorCode::FormatError, "unknown argument role '" + std::string(s) + "'");
}

// -- occurrences ----------------------------------------------------------------

ArgumentOccurrences::ArgumentOccurrences(Token word, std::vector<Role> roles, std::vector<OccurrenceRow> rows)
    : word_(std::move(word)), roles_(std::move(roles)), rows_(std::move(rows)) {
  arity_ = static_cast<std::size_t>(std::count_if(roles_.begin(), roles_.end(), [](Role r) { return r != Role::Prep; }));
  if (arity_ < 1 || arity_ > 3)
    throw Error(ErrorCode::InvalidArgument, word_.str() + ": arity must be 1, 2 or 3, got " + std::to_string(arity_));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& args = rows_[r].args;
    bool same = args.size() == roles_.size();
    for (std::size_t i = 0; same && i < args.size(); ++i) same = args[i].role == roles_[i];
    if (!same) throw Error(ErrorCode::MixedRoles, word_.str() + ": row " + std::to_string(r) + " has a different role signature");
  }
}

ArgumentOccurrences ArgumentOccurrences::from_rows(Token word, std::vector<OccurrenceRow> rows) {
  if (rows.empty()) throw Error(ErrorCode::NoUsableRows, word.str() + ": no occurrence rows");
  std::vector<Role> roles;
  for (const auto& a : rows.front().args) roles.push_back(a.role);
  return ArgumentOccurrences(std::move(word), std::move(roles), std::move(rows));
}

std::vector<Role> ArgumentOccurrences::tensor_roles() const {
  std::vector<Role> out;
  for (Role r : roles_)
    if (r != Role::Prep) out.push_back(r);
  return out;
}

// -- provenance ------------------------------------------------------------------

std::string Provenance::str() const {
  switch (kind) {
    case ProvenanceKind::Summed: return "SUMMED";
    case ProvenanceKind::SummedSense: return "SUMMED_SENSE:" + std::to_string(sense);
    case ProvenanceKind::Regressed: return "REGRESSED";
    case ProvenanceKind::Separable: return "SEPARABLE";
  }
  return "SUMMED";
}

Provenance Provenance::parse(std::string_view s) {
  if (s == "SUMMED") return {ProvenanceKind::Summed, -1};
  if (s == "REGRESSED") return {ProvenanceKind::Regressed, -1};
  if (s == "SEPARABLE") return {ProvenanceKind::Separable, -1};
  constexpr std::string_view kSense = "SUMMED_SENSE:";
  if (s.substr(0, kSense.size()) == kSense) {
    const auto k = textio::parse_int(s.substr(kSense.size()));
    if (k < 0) throw Error(ErrorCode::FormatError, "negative sense index");
    return {ProvenanceKind::SummedSense, static_cast<int>(k)};
  }
  throw Error(ErrorCode::FormatError, "unknown provenance '" + std::string(s) + "'");
}

const Vector& VerbTensor::vector() const {
  if (const auto* v = std::get_if<Vector>(&payload)) return *v;
  throw Error(ErrorCode::DimensionMismatch, word.str() + " is not an order-1 tensor");
}

const Matrix& VerbTensor::matrix() const {
  if (const auto* m = std::get_if<Matrix>(&payload)) return *m;
  throw Error(ErrorCode::DimensionMismatch, word.str() + " is not an order-2 tensor");
}

const Tensor3& VerbTensor::tensor3() const {
  if (const auto* t = std::get_if<Tensor3>(&payload)) return *t;
  throw Error(ErrorCode::DimensionMismatch, word.str() + " is not an order-3 tensor");
}

// -- builders --------------------------------------------------------------------

namespace {

// Looks up the vectors of the tensor legs of one row; nullopt when any is OOV.
std::optional<std::vector<const Vector*>> leg_vectors(const SemanticSpace& space, const OccurrenceRow& row) {
  std::vector<const Vector*> legs;
  for (const auto& a : row.args) {
    if (a.role == Role::Prep) continue;
    const Vector* v = space.find(a.token);
    if (!v) return std::nullopt;
    legs.push_back(v);
  }
  return legs;
}

}  // namespace

VerbTensor sum_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ) {
  const std::size_t n = space.dim();
  VerbTensor out;
  out.word = occ.word();
  out.role_signature = occ.tensor_roles();
  out.provenance = {ProvenanceKind::Summed, -1};
  switch (occ.arity()) {
    case 1: out.payload = Vector(n); break;
    case 2: out.payload = Matrix(n, n); break;
    default: out.payload = Tensor3(n, n, n); break;
  }

  for (const auto& row : occ.rows()) {
    const auto legs = leg_vectors(space, row);
    if (!legs) {
      ++out.skipped_rows;
      continue;
    }
    ++out.used_rows;
    const auto& l = *legs;
    if (auto* v = std::get_if<Vector>(&out.payload)) {
      for (std::size_t i = 0; i < n; ++i) (*v)[i] += (*l[0])[i];
    } else if (auto* m = std::get_if<Matrix>(&out.payload)) {
      for (std::size_t i = 0; i < n; ++i) {
        const double a = (*l[0])[i];
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) (*m)(i, j) += a * (*l[1])[j];
      }
    } else {
      auto& t = std::get<Tensor3>(out.payload);
      for (std::size_t i = 0; i < n; ++i) {
        const double a = (*l[0])[i];
        if (a == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
          const double ab = a * (*l[1])[j];
          if (ab == 0.0) continue;
          for (std::size_t k = 0; k < n; ++k) t(i, j, k) += ab * (*l[2])[k];
        }
      }
    }
  }
  if (out.used_rows == 0)
    throw Error(ErrorCode::NoUsableRows, occ.word().str() + ": all " + std::to_string(out.skipped_rows) +
                                              " rows have out-of-vocabulary arguments");
  return out;
}

VerbTensor separable_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ) {
  if (occ.arity() != 2) throw Error(ErrorCode::InvalidArgument, "separable tensors need arity 2");
  Vector left(space.dim()), right(space.dim());
  VerbTensor out;
  out.word = occ.word();
  out.role_signature = occ.tensor_roles();
  out.provenance = {ProvenanceKind::Separable, -1};
  for (const auto& row : occ.rows()) {
    const auto legs = leg_vectors(space, row);
    if (!legs) {
      ++out.skipped_rows;
      continue;
    }
    ++out.used_rows;
    left = left + *(*legs)[0];
    right = right + *(*legs)[1];
  }
  if (out.used_rows == 0) throw Error(ErrorCode::NoUsableRows, occ.word().str() + ": no usable rows");
  out.payload = tensor_product(left, right);
  return out;
}

VerbTensor vp_verb_tensor(const SemanticSpace& space, const Token& verb, const std::vector<Token>& objects) {
  Vector acc(space.dim());
  VerbTensor out;
  out.word = verb;
  out.role_signature = {Role::Obj, Role::Obj};
  out.provenance = {ProvenanceKind::Summed, -1};
  for (const auto& o : objects) {
    if (const Vector* v = space.find(o)) {
      acc = acc + *v;
      ++out.used_rows;
    } else {
      ++out.skipped_rows;
    }
  }
  if (out.used_rows == 0) throw Error(ErrorCode::NoUsableRows, verb.str() + ": no usable objects");
  out.payload = frobenius_copy(acc);
  return out;
}

VerbTensor preposition_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ) {
  const auto& roles = occ.roles();
  const bool verb_mod = roles == std::vector<Role>{Role::ModifiedVerb, Role::Obj};
  const bool noun_mod = roles == std::vector<Role>{Role::NounHead, Role::Obj};
  if (!verb_mod && !noun_mod)
    throw Error(ErrorCode::MixedRoles, occ.word().str() + ": prepositions need (MODIFIED_VERB, OBJ) or (NOUN_HEAD, OBJ)");
  return sum_tensor(space, occ);
}

VerbTensor phrasal_verb_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ) {
  if (occ.roles() != std::vector<Role>{Role::Subj, Role::Prep, Role::Obj})
    throw Error(ErrorCode::MixedRoles, occ.word().str() + ": phrasal verbs need (SUBJ, PREP, OBJ)");
  if (occ.rows().empty()) throw Error(ErrorCode::NoUsableRows, occ.word().str() + ": no rows");
  const Token& prep = occ.rows().front().args[1].token;
  for (const auto& row : occ.rows())
    if (row.args[1].token != prep)
      throw Error(ErrorCode::MixedPreposition,
                  occ.word().str() + ": rows mix '" + prep.lemma + "' and '" + row.args[1].token.lemma + "'");
  VerbTensor out = sum_tensor(space, occ);
  out.word = Token{occ.word().lemma + "_" + prep.lemma, occ.word().pos};
  return out;
}

VerbTensor complemented_verb_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ) {
  if (occ.roles() != std::vector<Role>{Role::Subj, Role::BareInf})
    throw Error(ErrorCode::MixedRoles, occ.word().str() + ": complemented verbs need (SUBJ, BARE_INF)");
  return sum_tensor(space, occ);
}

VerbTensor build_tensor(const SemanticSpace& space, const ArgumentOccurrences& occ) {
  const auto& roles = occ.roles();
  if (std::find(roles.begin(), roles.end(), Role::Prep) != roles.end()) return phrasal_verb_tensor(space, occ);
  if (roles.size() == 2 && (roles.front() == Role::ModifiedVerb || roles.front() == Role::NounHead))
    return preposition_tensor(space, occ);
  if (roles.size() == 2 && roles[1] == Role::BareInf) return complemented_verb_tensor(space, occ);
  return sum_tensor(space, occ);
}

// -- occurrence files -------------------------------------------------------------

OccurrenceLine parse_occurrence_line(std::string_view line) {
  const auto cols = textio::split_exact(line, '\t');
  if (cols.size() < 2 || cols.size() > 3) throw Error(ErrorCode::FormatError, "expected 2 or 3 tab-separated columns");
  OccurrenceLine out;
  const auto head = textio::trim(cols[0]);
  out.word = head.find('_') == std::string_view::npos ? Token::make(std::string(head), Pos::Verb) : Token::parse(head);
  for (auto field : textio::split(cols[1], ";")) {
    field = textio::trim(field);
    if (field.empty()) continue;
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw Error(ErrorCode::FormatError, "argument must be ROLE=lemma_POS");
    out.row.args.push_back(Argument{parse_role(field.substr(0, eq)), Token::parse(field.substr(eq + 1))});
  }
  if (out.row.args.empty()) throw Error(ErrorCode::FormatError, "row has no arguments");
  if (cols.size() == 3 && !textio::trim(cols[2]).empty()) {
    const auto id = textio::parse_int(cols[2]);
    if (id < 0) throw Error(ErrorCode::FormatError, "negative context id");
    out.row.context_id = static_cast<std::size_t>(id);
  }
  return out;
}

std::vector<OccurrenceLine> read_occurrences(const std::string& path) {
  std::vector<OccurrenceLine> out;
  const auto lines = textio::read_lines(path);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (textio::trim(lines[i]).empty() || lines[i][0] == '#') continue;
    try {
      out.push_back(parse_occurrence_line(lines[i]));
    } catch (const Error& e) {
      throw Error(e.code(), path + ":" + std::to_string(i + 1) + ": " + e.detail());
    }
  }
  return out;
}

std::vector<ArgumentOccurrences> group_occurrences(const std::vector<OccurrenceLine>& lines) {
  using Key = std::pair<Token, std::vector<Role>>;
  std::vector<Key> order;
  std::map<Key, std::vector<OccurrenceRow>> groups;
  for (const auto& l : lines) {
    std::vector<Role> roles;
    for (const auto& a : l.row.args) roles.push_back(a.role);
    Key key{l.word, roles};
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back(l.row);
  }
  std::vector<ArgumentOccurrences> out;
  for (const auto& key : order) out.emplace_back(key.first, key.second, std::move(groups[key]));
  return out;
}

// -- lexicon -----------------------------------------------------------------------

const VerbTensor& SenseTensors::for_sense(std::size_t sense) const {
  if (sense >= tensor_for_sense.size() || tensor_for_sense[sense] >= tensors.size())
    throw Error(ErrorCode::MissingSenseTensor, word.str() + ": no tensor for sense " + std::to_string(sense));
  return tensors[tensor_for_sense[sense]];
}

void TensorLexicon::add(VerbTensor tensor) {
  std::pair<Token, int> key{tensor.word, tensor.order()};
  tensors_.insert_or_assign(std::move(key), std::move(tensor));
}

void TensorLexicon::add_senses(SenseTensors senses) {
  if (senses.tensors.empty()) throw Error(ErrorCode::MissingSenseTensor, senses.word.str() + ": empty sense set");
  std::pair<Token, int> key{senses.word, senses.tensors.front().order()};
  senses_.insert_or_assign(std::move(key), std::move(senses));
}

const VerbTensor* TensorLexicon::find(const Token& word, int order) const {
  auto it = tensors_.find({word, order});
  return it == tensors_.end() ? nullptr : &it->second;
}

const SenseTensors* TensorLexicon::find_senses(const Token& word, int order) const {
  auto it = senses_.find({word, order});
  return it == senses_.end() ? nullptr : &it->second;
}

namespace {

std::string roles_str(const std::vector<Role>& roles) {
  std::string out;
  for (std::size_t i = 0; i < roles.size(); ++i) {
    if (i) out.push_back(',');
    out += to_string(roles[i]);
  }
  return out;
}

void write_tensor(std::string& out, const VerbTensor& t) {
  out += "tensor " + t.word.str() + " " + t.provenance.str() + " " + roles_str(t.role_signature) + " " +
         std::to_string(t.used_rows) + " " + std::to_string(t.skipped_rows);
  std::span<const double> entries;
  std::visit(
      [&](const auto& p) {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, Vector>) {
          out += " " + std::to_string(p.dim());
        } else if constexpr (std::is_same_v<P, Matrix>) {
          out += " " + std::to_string(p.rows()) + " " + std::to_string(p.cols());
        } else {
          out += " " + std::to_string(p.d1()) + " " + std::to_string(p.d2()) + " " + std::to_string(p.d3());
        }
        entries = p.entries();
      },
      t.payload);
  out += "\n" + textio::join_doubles(entries) + "\n";
}

}  // namespace

std::string serialize_lexicon(const TensorLexicon& lex) {
  std::string out = "frobsem-tensors v1\n";
  for (const auto& [key, t] : lex.tensors()) write_tensor(out, t);
  for (const auto& [key, s] : lex.senses()) {
    for (const auto& t : s.tensors) write_tensor(out, t);
    out += "sensemap " + s.word.str() + " " + std::to_string(key.second);
    for (std::size_t idx : s.tensor_for_sense) out += " " + std::to_string(s.tensors[idx].provenance.sense);
    out += "\n";
  }
  return out;
}

TensorLexicon parse_lexicon(const std::vector<std::string>& lines) {
  if (lines.empty() || textio::trim(lines[0]) != "frobsem-tensors v1")
    throw Error(ErrorCode::FormatError, "bad tensor file header");
  TensorLexicon lex;
  std::map<std::tuple<Token, int, int>, VerbTensor> sense_tensors;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = textio::split(lines[i], " ");
    if (fields.empty()) continue;
    const std::string where = "tensor file line " + std::to_string(i + 1) + ": ";
    if (fields[0] == "tensor") {
      if (fields.size() < 7 || fields.size() > 9) throw Error(ErrorCode::FormatError, where + "bad tensor record");
      VerbTensor t;
      t.word = Token::parse(fields[1]);
      t.provenance = Provenance::parse(fields[2]);
      for (auto r : textio::split(fields[3], ",")) t.role_signature.push_back(parse_role(r));
      t.used_rows = static_cast<std::size_t>(textio::parse_int(fields[4]));
      t.skipped_rows = static_cast<std::size_t>(textio::parse_int(fields[5]));
      std::vector<std::size_t> dims;
      for (std::size_t f = 6; f < fields.size(); ++f) dims.push_back(static_cast<std::size_t>(textio::parse_int(fields[f])));
      if (i + 1 >= lines.size()) throw Error(ErrorCode::FormatError, where + "missing entries line");
      std::vector<double> entries = textio::parse_vector(lines[++i]).values();
      try {
        if (dims.size() == 1) {
          if (entries.size() != dims[0]) throw Error(ErrorCode::DimensionMismatch, "entry count");
          t.payload = Vector(std::move(entries));
        } else if (dims.size() == 2) {
          t.payload = Matrix(dims[0], dims[1], std::move(entries));
        } else {
          t.payload = Tensor3(dims[0], dims[1], dims[2], std::move(entries));
        }
      } catch (const Error& e) {
        throw Error(ErrorCode::FormatError, where + e.detail());
      }
      if (t.role_signature.size() != dims.size())
        throw Error(ErrorCode::FormatError, where + "role signature length differs from order");
      if (t.provenance.kind == ProvenanceKind::SummedSense) {
        const int order = t.order();
        sense_tensors.insert_or_assign({t.word, order, t.provenance.sense}, std::move(t));
      } else {
        lex.add(std::move(t));
      }
    } else if (fields[0] == "sensemap") {
      if (fields.size() < 4) throw Error(ErrorCode::FormatError, where + "bad sensemap record");
      SenseTensors s;
      s.word = Token::parse(fields[1]);
      const int order = static_cast<int>(textio::parse_int(fields[2]));
      std::map<int, std::size_t> index_of;
      for (std::size_t f = 3; f < fields.size(); ++f) {
        const int sense = static_cast<int>(textio::parse_int(fields[f]));
        auto [it, fresh] = index_of.try_emplace(sense, s.tensors.size());
        if (fresh) {
          auto t = sense_tensors.find({s.word, order, sense});
          if (t == sense_tensors.end())
            throw Error(ErrorCode::FormatError, where + "sensemap refers to missing sense tensor " + std::to_string(sense));
          s.tensors.push_back(t->second);
        }
        s.tensor_for_sense.push_back(it->second);
      }
      lex.add_senses(std::move(s));
    } else {
      throw Error(ErrorCode::FormatError, where + "unknown record '" + std::string(fields[0]) + "'");
    }
  }
  return lex;
}

void save_lexicon(const TensorLexicon& lex, const std::string& path) { textio::write_file(path, serialize_lexicon(lex)); }

TensorLexicon load_lexicon(const std::string& path) { return parse_lexicon(textio::read_lines(path)); }

}  // namespace frobsem
