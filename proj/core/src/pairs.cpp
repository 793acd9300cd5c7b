#include "vortex/pairs.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

namespace vortex {

struct FormalObject::Node {
  struct ExtData {
    FormalObject sub;
    FormalObject quot;
  };
  std::variant<FormalBlock, std::vector<FormalObject>, ExtData> data;
  int rank = 0;
  int degree = 0;
  int phi_count = 0;
  bool nonsplit = false;
};

FormalObject FormalObject::block(int rank, int degree, bool carries_phi) {
  if (rank < 1) throw InvalidInput("block rank must be >= 1");
  if (carries_phi && rank == 1 && degree < 0) {
    throw InvalidInput("a line bundle with a nonzero section has degree >= 0");
  }
  auto node = std::make_shared<Node>();
  node->data = FormalBlock{rank, degree, carries_phi};
  node->rank = rank;
  node->degree = degree;
  node->phi_count = carries_phi ? 1 : 0;
  return FormalObject(std::move(node));
}

FormalObject FormalObject::sum(std::vector<FormalObject> summands) {
  std::vector<FormalObject> flat;
  for (auto& s : summands) {
    if (s.kind() == Kind::sum) {
      for (const auto& inner : s.summands()) flat.push_back(inner);
    } else {
      flat.push_back(std::move(s));
    }
  }
  if (flat.size() < 2) throw InvalidInput("a direct sum needs at least two summands");
  auto node = std::make_shared<Node>();
  for (const auto& s : flat) {
    node->rank += s.rank();
    node->degree += s.degree();
    node->phi_count += s.phi_count();
    node->nonsplit = node->nonsplit || s.has_nonsplit_ext();
  }
  node->data = std::move(flat);
  return FormalObject(std::move(node));
}

FormalObject FormalObject::ext(FormalObject sub, FormalObject quot, bool split) {
  if (split) return sum({std::move(sub), std::move(quot)});
  auto node = std::make_shared<Node>();
  node->rank = sub.rank() + quot.rank();
  node->degree = sub.degree() + quot.degree();
  node->phi_count = sub.phi_count() + quot.phi_count();
  node->nonsplit = true;
  node->data = Node::ExtData{std::move(sub), std::move(quot)};
  return FormalObject(std::move(node));
}

FormalObject::Kind FormalObject::kind() const {
  switch (node_->data.index()) {
    case 0: return Kind::block;
    case 1: return Kind::sum;
    default: return Kind::ext;
  }
}

int FormalObject::rank() const { return node_->rank; }
int FormalObject::degree() const { return node_->degree; }
int FormalObject::phi_count() const { return node_->phi_count; }
bool FormalObject::has_nonsplit_ext() const { return node_->nonsplit; }

const FormalBlock& FormalObject::as_block() const {
  if (kind() != Kind::block) throw InvalidInput("not a block");
  return std::get<FormalBlock>(node_->data);
}

std::span<const FormalObject> FormalObject::summands() const {
  if (kind() != Kind::sum) throw InvalidInput("not a direct sum");
  return std::get<std::vector<FormalObject>>(node_->data);
}

const FormalObject& FormalObject::sub() const {
  if (kind() != Kind::ext) throw InvalidInput("not an extension");
  return std::get<Node::ExtData>(node_->data).sub;
}

const FormalObject& FormalObject::quot() const {
  if (kind() != Kind::ext) throw InvalidInput("not an extension");
  return std::get<Node::ExtData>(node_->data).quot;
}

std::string FormalObject::to_string() const {
  std::ostringstream os;
  switch (kind()) {
    case Kind::block: {
      const auto& b = as_block();
      os << "B(" << b.rank << "," << b.degree << (b.carries_phi ? ",phi" : "") << ")";
      break;
    }
    case Kind::sum: {
      os << "Sum[";
      bool first = true;
      for (const auto& s : summands()) {
        os << (first ? "" : ", ") << s.to_string();
        first = false;
      }
      os << "]";
      break;
    }
    case Kind::ext:
      os << "Ext(" << sub().to_string() << " -> " << quot().to_string() << ")";
      break;
  }
  return os.str();
}

bool operator==(const FormalObject& a, const FormalObject& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormalObject::Kind::block: return a.as_block() == b.as_block();
    case FormalObject::Kind::sum: {
      auto sa = a.summands();
      auto sb = b.summands();
      return std::equal(sa.begin(), sa.end(), sb.begin(), sb.end());
    }
    case FormalObject::Kind::ext: return a.sub() == b.sub() && a.quot() == b.quot();
  }
  return false;
}

FormalPair FormalPair::from(FormalObject object) {
  const int n = object.phi_count();
  if (n > 1) throw InvalidInput("at most one block may carry the section");
  return FormalPair{std::move(object), n == 1};
}

// ---------------------------------------------------------------------------

namespace {

// A visible subobject together with the formal objects it and its quotient
// are built from. A missing quotient means the subobject is everything.
struct Entry {
  SubobjectRecord record;
  FormalObject sub;
  std::optional<FormalObject> quotient;
};

FormalObject sum_or_single(std::vector<FormalObject> parts) {
  if (parts.size() == 1) return std::move(parts.front());
  return FormalObject::sum(std::move(parts));
}

std::vector<Entry> entries_of(const FormalObject& obj) {
  std::vector<Entry> out;
  switch (obj.kind()) {
    case FormalObject::Kind::block: {
      const auto& b = obj.as_block();
      out.push_back({{b.rank, b.degree, b.carries_phi}, obj, std::nullopt});
      break;
    }
    case FormalObject::Kind::sum: {
      const auto children = obj.summands();
      std::vector<std::vector<Entry>> per_child;
      per_child.reserve(children.size());
      for (const auto& c : children) per_child.push_back(entries_of(c));

      // choice[i] == 0 picks the zero subobject of child i, k > 0 picks entry k-1.
      std::vector<std::size_t> choice(children.size(), 0);
      while (true) {
        std::size_t i = 0;
        while (i < choice.size() && choice[i] == per_child[i].size()) choice[i++] = 0;
        if (i == choice.size()) break;
        ++choice[i];

        SubobjectRecord rec;
        std::vector<FormalObject> subs;
        std::vector<FormalObject> quots;
        for (std::size_t c = 0; c < children.size(); ++c) {
          if (choice[c] == 0) {
            quots.push_back(children[c]);
            continue;
          }
          const Entry& e = per_child[c][choice[c] - 1];
          rec.rank += e.record.rank;
          rec.degree += e.record.degree;
          rec.contains_phi = rec.contains_phi || e.record.contains_phi;
          subs.push_back(e.sub);
          if (e.quotient) quots.push_back(*e.quotient);
        }
        std::optional<FormalObject> q;
        if (!quots.empty()) q = sum_or_single(std::move(quots));
        out.push_back({rec, sum_or_single(std::move(subs)), std::move(q)});
      }
      break;
    }
    case FormalObject::Kind::ext: {
      const FormalObject& a = obj.sub();
      const FormalObject& qobj = obj.quot();
      for (auto& e : entries_of(a)) {
        std::optional<FormalObject> q = e.quotient ? FormalObject::ext(*e.quotient, qobj) : qobj;
        out.push_back({e.record, e.sub, std::move(q)});
      }
      for (auto& e : entries_of(qobj)) {
        SubobjectRecord rec{a.rank() + e.record.rank, a.degree() + e.record.degree,
                            a.phi_count() > 0 || e.record.contains_phi};
        out.push_back({rec, FormalObject::ext(a, e.sub), e.quotient});
      }
      break;
    }
  }
  return out;
}

// Stable blocks of a tree made only of blocks and direct sums.
std::optional<std::vector<FormalBlock>> block_decomposition(const FormalObject& obj) {
  switch (obj.kind()) {
    case FormalObject::Kind::block: return std::vector<FormalBlock>{obj.as_block()};
    case FormalObject::Kind::sum: {
      std::vector<FormalBlock> out;
      for (const auto& s : obj.summands()) {
        auto part = block_decomposition(s);
        if (!part) return std::nullopt;
        out.insert(out.end(), part->begin(), part->end());
      }
      return out;
    }
    case FormalObject::Kind::ext: return std::nullopt;
  }
  return std::nullopt;
}

// Ranks of the blocks when all have the given slope.
std::optional<std::vector<int>> seshadri_ranks(const FormalObject& obj, const Rational& slope) {
  auto blocks = block_decomposition(obj);
  if (!blocks) return std::nullopt;
  std::vector<int> ranks;
  for (const auto& b : *blocks) {
    if (Rational(BigInt(b.degree), BigInt(b.rank)) != slope) return std::nullopt;
    ranks.push_back(b.rank);
  }
  return ranks;
}

Wall wall_for(const FormalPair& pair, const Rational& value) {
  const int R = pair.rank();
  const int d = pair.degree();
  WallKind kind = WallKind::interior;
  if (value == Rational(BigInt(d), BigInt(R))) kind = WallKind::min;
  if (R >= 2 && value == Rational(BigInt(d), BigInt(R - 1))) kind = WallKind::max;
  return {value, kind};
}

bool counts_for_mu_minus(const FormalPair& pair, const SubobjectRecord& rec) {
  return !pair.has_phi || rec.contains_phi;
}

Rational quotient_slope(const FormalPair& pair, const SubobjectRecord& rec) {
  return Rational(BigInt(pair.degree() - rec.degree), BigInt(pair.rank() - rec.rank));
}

}  // namespace

std::vector<SubobjectRecord> visible_subobjects(const FormalPair& pair) {
  std::vector<SubobjectRecord> out;
  for (const auto& e : entries_of(pair.object)) out.push_back(e.record);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

StabilityInterval stability_interval(const FormalPair& pair) {
  const auto entries = entries_of(pair.object);
  StabilityInterval iv;
  iv.mu_plus = pair.object.slope();
  for (const auto& e : entries) iv.mu_plus = std::max(iv.mu_plus, e.record.slope());

  if (!pair.has_phi) iv.mu_minus = pair.object.slope();  // E'' = 0
  for (const auto& e : entries) {
    if (e.record.rank >= pair.rank() || !counts_for_mu_minus(pair, e.record)) continue;
    const Rational s = quotient_slope(pair, e.record);
    if (!iv.mu_minus || s < *iv.mu_minus) iv.mu_minus = s;
  }
  iv.stable = !iv.mu_minus || iv.mu_plus < *iv.mu_minus;
  iv.approximate = pair.object.has_nonsplit_ext() || !iv.mu_minus;
  return iv;
}

bool is_tau_stable(const FormalPair& pair, const Rational& tau_hat, bool strict) {
  const auto iv = stability_interval(pair);
  if (strict) return iv.mu_plus < tau_hat && (!iv.mu_minus || tau_hat < *iv.mu_minus);
  return iv.mu_plus <= tau_hat && (!iv.mu_minus || tau_hat <= *iv.mu_minus);
}

Grading gr_minus(const FormalPair& pair) {
  const auto iv = stability_interval(pair);
  if (!iv.mu_minus) throw Indeterminate("gr- indeterminate: no visible section-carrying proper subobject");
  if (!iv.semistable()) throw InvalidInput("gr- needs a semistable pair");
  const Rational& mu = *iv.mu_minus;

  struct Candidate {
    SubobjectRecord record;
    FormalObject quotient;
  };
  std::vector<Candidate> candidates;
  if (!pair.has_phi) candidates.push_back({{0, 0, false}, pair.object});
  for (const auto& e : entries_of(pair.object)) {
    if (e.record.rank >= pair.rank() || !counts_for_mu_minus(pair, e.record)) continue;
    if (quotient_slope(pair, e.record) != mu || !e.quotient) continue;
    candidates.push_back({e.record, *e.quotient});
  }
  int min_rank = pair.rank();
  for (const auto& c : candidates) min_rank = std::min(min_rank, c.record.rank);
  for (const auto& c : candidates) {
    if (c.record.rank != min_rank) continue;
    if (auto ranks = seshadri_ranks(c.quotient, mu)) {
      return {StratumSignature(c.record.degree, c.record.rank, *ranks), wall_for(pair, mu)};
    }
  }
  throw Indeterminate("Seshadri data indeterminate: quotient by E_phi is not a sum of stable blocks");
}

Grading gr_plus(const FormalPair& pair) {
  const auto iv = stability_interval(pair);
  if (!iv.semistable()) throw InvalidInput("gr+ needs a semistable pair");
  const Rational& mu = iv.mu_plus;

  if (mu == pair.object.slope()) {
    if (auto ranks = seshadri_ranks(pair.object, mu)) return {StratumSignature(0, 0, *ranks), wall_for(pair, mu)};
    throw Indeterminate("Seshadri data indeterminate: E is not a sum of stable blocks of slope " + mu.to_string());
  }

  std::optional<Grading> best;
  int best_rank = 0;
  for (const auto& e : entries_of(pair.object)) {
    if (e.record.rank >= pair.rank() || e.record.contains_phi || e.record.slope() != mu) continue;
    if (e.record.rank <= best_rank) continue;
    if (auto ranks = seshadri_ranks(e.sub, mu)) {
      best_rank = e.record.rank;
      best = Grading{StratumSignature(pair.degree() - e.record.degree, pair.rank() - e.record.rank, *ranks),
                     wall_for(pair, mu)};
    }
  }
  if (!best) throw Indeterminate("Seshadri data indeterminate: maximal destabilizer is not a sum of stable blocks");
  return *best;
}

Grading flow_limit(const FormalPair& pair, FlowDirection direction) {
  return direction == FlowDirection::down ? gr_plus(pair) : gr_minus(pair);
}

std::optional<Wall> fixed_point_wall(const FormalPair& pair) {
  const FormalObject& obj = pair.object;
  if (!pair.has_phi) {
    if (seshadri_ranks(obj, obj.slope())) return wall_for(pair, obj.slope());
    return std::nullopt;
  }
  if (obj.kind() != FormalObject::Kind::sum) return std::nullopt;

  std::optional<FormalObject> phi_part;
  std::optional<Rational> tau;
  for (const auto& s : obj.summands()) {
    if (s.phi_count() > 0) {
      phi_part = s;
      continue;
    }
    if (s.kind() != FormalObject::Kind::block) return std::nullopt;
    if (tau && *tau != s.slope()) return std::nullopt;
    tau = s.slope();
  }
  if (!phi_part || !tau) return std::nullopt;

  const int d_phi = phi_part->degree();
  const int r_phi = phi_part->rank();
  if (!(Rational(BigInt(d_phi), BigInt(r_phi)) < *tau)) return std::nullopt;
  if (r_phi >= 2 && !(*tau < Rational(BigInt(d_phi), BigInt(r_phi - 1)))) return std::nullopt;
  if (!is_tau_stable(FormalPair::from(*phi_part), *tau, true)) return std::nullopt;
  return wall_for(pair, *tau);
}

Lemma47Report check_lemma_4_7(const FormalPair& pair, const SubobjectRecord& chosen) {
  if (chosen.rank <= 0 || chosen.rank >= pair.rank() || !chosen.contains_phi) {
    throw InvalidInput("E_phi must be a proper nonzero section-carrying subobject");
  }
  const auto iv = stability_interval(pair);
  if (!iv.mu_minus) throw InvalidInput("mu_minus is unbounded on the visible lattice");
  const Rational& mu_minus = *iv.mu_minus;

  for (const auto& e : entries_of(pair.object)) {
    if (e.record != chosen || quotient_slope(pair, e.record) != mu_minus) continue;
    const auto sub_iv = stability_interval(FormalPair::from(e.sub));
    Lemma47Report rep;
    rep.clause_i = sub_iv.mu_plus <= iv.mu_plus;
    rep.clause_ii = !sub_iv.mu_minus || *sub_iv.mu_minus >= mu_minus;
    rep.clause_v = chosen.slope() < mu_minus;
    const std::string sub_minus = sub_iv.mu_minus ? sub_iv.mu_minus->to_string() : "+inf";
    rep.details.push_back("(i) " + sub_iv.mu_plus.to_string() + " <= " + iv.mu_plus.to_string());
    rep.details.push_back("(ii) " + sub_minus + " >= " + mu_minus.to_string());
    rep.details.push_back("(v) " + chosen.slope().to_string() + " < " + mu_minus.to_string());
    return rep;
  }
  throw InvalidInput("chosen subobject is not a visible subobject realizing mu_minus");
}

FormalPair canonical_split_pair(const StratumSignature& sig, const Rational& wall) {
  std::vector<FormalObject> parts;
  if (sig.r_phi > 0) parts.push_back(FormalObject::block(sig.r_phi, sig.d_phi, true));
  const auto degrees = sig.summand_degrees(wall);
  for (std::size_t i = 0; i < sig.ranks.size(); ++i) parts.push_back(FormalObject::block(sig.ranks[i], degrees[i]));
  if (parts.empty()) throw InvalidInput("empty signature");
  return FormalPair::from(sum_or_single(std::move(parts)));
}

}  // namespace vortex
