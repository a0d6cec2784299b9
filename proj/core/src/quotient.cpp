#include "braidforge/quotient.hpp"

#include <deque>
#include <sstream>

#include "braidforge/abelianize.hpp"
#include "braidforge/errors.hpp"

namespace braidforge {

std::int64_t AbelianTarget::order() const {
  if (!finite()) throw Error("infinite target has no order");
  std::int64_t n = 1;
  for (std::int64_t d : torsion) n = checked_mul(n, d);
  return n;
}

QuotientMap QuotientMap::make(Presentation source, AbelianTarget target,
                              std::vector<Tuple> images) {
  for (std::int64_t d : target.torsion)
    if (d < 2) throw QuotientError("torsion moduli must be at least 2");
  if (images.size() != source.generators().size())
    throw QuotientError("image list must cover every generator");
  for (Tuple& t : images) {
    if (t.size() != target.components())
      throw QuotientError("image tuple has wrong arity");
  }
  QuotientMap q(std::move(source), std::move(target), std::move(images));
  for (std::size_t i = 0; i < q.images_.size(); ++i)
    q.images_[i] = q.reduce(q.images_[i]);

  for (std::size_t i = 0; i < q.source_.relators().size(); ++i) {
    Tuple img = q.image(q.source_.relators()[i]);
    if (img != q.zero()) {
      std::string msg = "RelatorNotKilled: relator '" +
                        to_string(q.source_.relators()[i]) + "' maps to (";
      for (std::size_t j = 0; j < img.size(); ++j)
        msg += (j ? "," : "") + std::to_string(img[j]);
      throw QuotientError(msg + ")");
    }
  }

  // Surjectivity: the images together with the torsion lattice must span
  // Z^components, i.e. the stacked matrix has Smith form with all ones.
  const std::size_t k = q.target_.components();
  if (k > 0) {
    IntMatrix m(q.images_.size() + q.target_.torsion.size(), k);
    for (std::size_t i = 0; i < q.images_.size(); ++i)
      for (std::size_t j = 0; j < k; ++j) m.at(i, j) = q.images_[i][j];
    for (std::size_t i = 0; i < q.target_.torsion.size(); ++i)
      m.at(q.images_.size() + i,
           static_cast<std::size_t>(q.target_.free_rank) + i) =
          q.target_.torsion[i];
    SmithForm s = smith_normal_form(m);
    bool onto = s.rank() == k;
    for (const BigInt& d : s.diagonal())
      if (d > 1) onto = false;
    if (!onto) throw QuotientError("NotSurjective: images do not generate");
  }
  return q;
}

Tuple QuotientMap::reduce(Tuple t) const {
  for (std::size_t i = 0; i < target_.torsion.size(); ++i) {
    std::size_t j = static_cast<std::size_t>(target_.free_rank) + i;
    std::int64_t d = target_.torsion[i];
    t[j] = ((t[j] % d) + d) % d;
  }
  return t;
}

Tuple QuotientMap::image(Symbol g) const {
  auto idx = source_.generator_index(g);
  if (!idx) throw QuotientError("generator '" + g.name() + "' not in source");
  return images_[*idx];
}

Tuple QuotientMap::image(const Word& w) const {
  Tuple acc = zero();
  for (const Syllable& s : w.syllables()) {
    Tuple img = image(s.gen);
    for (std::size_t j = 0; j < acc.size(); ++j)
      acc[j] = checked_add(acc[j], checked_mul(img[j], s.exp));
  }
  return reduce(std::move(acc));
}

namespace {

enum class GenKind { Sigma, Rho };

GenKind classify(Symbol g) {
  const std::string& n = g.name();
  if (!n.empty() && n[0] == 's') return GenKind::Sigma;
  if (!n.empty() && n[0] == 'r') return GenKind::Rho;
  throw QuotientError("generator '" + n +
                      "' is not a sigma/rho catalog generator");
}

}  // namespace

QuotientMap welded_abelianization_quotient(const Presentation& p) {
  std::vector<Tuple> images;
  for (Symbol g : p.generators())
    images.push_back(classify(g) == GenKind::Sigma ? Tuple{1, 0}
                                                   : Tuple{0, 1});
  return QuotientMap::make(p, AbelianTarget{1, {2}}, std::move(images));
}

QuotientMap flat_abelianization_quotient(const Presentation& p) {
  std::vector<Tuple> images;
  for (Symbol g : p.generators())
    images.push_back(classify(g) == GenKind::Sigma ? Tuple{1, 0}
                                                   : Tuple{0, 1});
  return QuotientMap::make(p, AbelianTarget{0, {2, 2}}, std::move(images));
}

std::size_t CosetTable::act(std::size_t coset, std::size_t gen_index,
                            int sign) const {
  return action_[coset * 2 * gens_ + 2 * gen_index + (sign < 0 ? 1 : 0)];
}

std::string CosetTable::str(const Presentation& p) const {
  std::ostringstream os;
  os << "coset";
  for (Symbol g : p.generators()) os << '\t' << g.name() << '\t' << g.name()
                                     << "^-1";
  os << '\n';
  for (std::size_t c = 0; c < size_; ++c) {
    os << c;
    for (std::size_t gi = 0; gi < gens_; ++gi)
      os << '\t' << act(c, gi, 1) << '\t' << act(c, gi, -1);
    os << '\n';
  }
  return os.str();
}

std::size_t Transversal::size() const {
  if (kind_ != Kind::Finite) throw Error("graded transversal has no size");
  return reps_.size();
}

const std::vector<Coset>& Transversal::cosets() const {
  if (kind_ != Kind::Finite)
    throw Error("graded transversal has no coset list");
  return coset_list_;
}

Word Transversal::rep(Coset c) const {
  if (kind_ == Kind::Finite) {
    auto i = static_cast<std::size_t>(c.a);
    if (c.b != 0 || i >= reps_.size()) throw Error("bad coset handle");
    return reps_[i];
  }
  return Word::from_syllables({{sigma1_, c.a}, {rho1_, c.b}});
}

Coset Transversal::coset_of_tuple(const Tuple& t) const {
  if (kind_ == Kind::Finite) {
    auto it = index_of_tuple_.find(t);
    if (it == index_of_tuple_.end())
      throw InternalError("tuple outside the finite coset table");
    return Coset{static_cast<std::int64_t>(it->second), 0};
  }
  if (t.size() != 2) throw InternalError("graded tuple arity");
  return Coset{t[0], t[1]};
}

std::string Transversal::coset_label(Coset c) const {
  if (kind_ == Kind::Finite) return std::to_string(c.a);
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

std::pair<CosetTable, Transversal> coset_table(const QuotientMap& q) {
  if (!q.target().finite())
    throw QuotientError(
        "coset_table requires a finite target; use graded_transversal");
  const auto& gens = q.source().generators();

  Transversal t;
  t.kind_ = Transversal::Kind::Finite;
  std::vector<Tuple> tuples;
  std::deque<std::size_t> queue;
  auto visit = [&](const Tuple& tuple, const Word& rep) {
    if (t.index_of_tuple_.count(tuple)) return;
    std::size_t id = tuples.size();
    t.index_of_tuple_.emplace(tuple, id);
    tuples.push_back(tuple);
    t.reps_.push_back(rep);
    queue.push_back(id);
  };
  visit(q.zero(), Word());
  while (!queue.empty()) {
    std::size_t c = queue.front();
    queue.pop_front();
    Tuple base = tuples[c];
    for (Symbol g : gens) {
      for (int sign : {1, -1}) {
        Tuple img = q.image(g);
        Tuple next = base;
        for (std::size_t j = 0; j < next.size(); ++j)
          next[j] = checked_add(next[j], sign * img[j]);
        next = q.reduce(std::move(next));
        visit(next, t.reps_[c] * Word(g, sign));
      }
    }
  }
  const std::size_t n = tuples.size();
  for (std::size_t i = 0; i < n; ++i)
    t.coset_list_.push_back(Coset{static_cast<std::int64_t>(i), 0});

  CosetTable table;
  table.size_ = n;
  table.gens_ = gens.size();
  table.action_.assign(n * 2 * gens.size(), 0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      for (int sign : {1, -1}) {
        Tuple next = tuples[c];
        const Tuple& img = q.images()[gi];
        for (std::size_t j = 0; j < next.size(); ++j)
          next[j] = checked_add(next[j], sign * img[j]);
        next = q.reduce(std::move(next));
        table.action_[c * 2 * gens.size() + 2 * gi + (sign < 0 ? 1 : 0)] =
            t.index_of_tuple_.at(next);
      }
    }
  }
  // Closure sanity: every relator fixes every coset.
  for (const Word& r : q.source().relators()) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t cur = c;
      for (const Syllable& s : r.syllables()) {
        auto gi = q.source().generator_index(s.gen);
        std::int64_t reps = s.exp < 0 ? -s.exp : s.exp;
        for (std::int64_t k = 0; k < reps; ++k)
          cur = table.act(cur, *gi, s.exp < 0 ? -1 : 1);
      }
      if (cur != c)
        throw InternalError("relator does not fix coset " + std::to_string(c));
    }
  }
  return {std::move(table), std::move(t)};
}

Transversal graded_transversal(const QuotientMap& q, std::int64_t window) {
  if (window < 0) throw QuotientError("window must be nonnegative");
  const AbelianTarget& tg = q.target();
  if (tg.free_rank != 1 || tg.torsion != std::vector<std::int64_t>{2})
    throw QuotientError(
        "graded transversal requires target Z x Z/2 (free rank 1, torsion "
        "[2])");
  Transversal t;
  t.kind_ = Transversal::Kind::GradedZxZ2;
  t.window_ = window;
  bool have_sigma = false, have_rho = false;
  for (std::size_t i = 0; i < q.images().size(); ++i) {
    const Tuple& img = q.images()[i];
    if (img == Tuple{1, 0}) {
      if (!have_sigma) {
        t.sigma1_ = q.source().generators()[i];
        have_sigma = true;
      }
    } else if (img == Tuple{0, 1}) {
      if (!have_rho) {
        t.rho1_ = q.source().generators()[i];
        have_rho = true;
      }
    } else {
      throw QuotientError(
          "graded transversal requires every generator image to be (1,0) or "
          "(0,1)");
    }
  }
  if (!have_sigma || !have_rho)
    throw QuotientError("graded transversal needs both coordinate images");
  return t;
}

Coset coset_of(const Transversal& t, const QuotientMap& q, const Word& w) {
  return t.coset_of_tuple(q.image(w));
}

Coset coset_step(const Transversal& t, const QuotientMap& q, Coset c,
                 Symbol g, int sign) {
  Tuple img = q.image(g);
  if (t.kind() == Transversal::Kind::GradedZxZ2) {
    std::int64_t m = checked_add(c.a, sign * img[0]);
    std::int64_t e = (((c.b + sign * img[1]) % 2) + 2) % 2;
    return Coset{m, e};
  }
  // Finite: translate through the tuple of the coset representative.
  Tuple base = q.image(t.rep(c));
  for (std::size_t j = 0; j < base.size(); ++j)
    base[j] = checked_add(base[j], sign * img[j]);
  return t.coset_of_tuple(q.reduce(std::move(base)));
}

}  // namespace braidforge
