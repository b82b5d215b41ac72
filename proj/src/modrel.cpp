#include "qshift/modrel.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qshift/qnum.hpp"

namespace qshift {

namespace {

RatQ q_node(const CartanData& cd, int i) { return qpow(cd.sym(i)); }

void append_a_ladder(AMonomial& m, int node, int base, int step, int count) {
  for (int t = 0; t < count; ++t) m[{node, base + step * t}] += 1;
}

std::string pair_label(int n, int m) {
  return "v(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

ModeVec scaled_vec(const ModeVec& v, const RatQ& c) {
  ModeVec out;
  out.escaped = v.escaped;
  for (const auto& [l, x] : v.c) out.add(l, x * c);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Realizations

ModuleRealization realize_psi_tilde_inflation(const CartanData& cd,
                                              const RealizeParams& p) {
  if (!cd.valid_node(p.node))
    throw std::invalid_argument("psi_tilde_inflation: bad node");
  if (p.basis < 0) throw std::invalid_argument("negative basis bound");
  const int j = p.node;
  const int d = cd.sym(j);
  const int k = p.spec;
  const RatQ qj = q_node(cd, j);
  const std::size_t alloc = static_cast<std::size_t>(p.basis) + 3;

  ModuleRealization real;
  real.cd = cd;
  real.name = cd.rank == 1 ? "sl2-neg-prefund" : "psi-tilde-inflation";
  real.complete_degree = p.basis + 2;
  const LWeight top = build_named_weight(cd, NamedWeight::PsiTilde, j, k);
  real.shift = lw_degree(cd, top);
  real.xplus.assign(alloc, std::vector<std::vector<ExpModeTerm>>(
                               static_cast<std::size_t>(cd.rank)));
  real.xminus = real.xplus;
  for (std::size_t m = 0; m < alloc; ++m) {
    real.labels.push_back("v" + std::to_string(m));
    real.inside.push_back(m <= static_cast<std::size_t>(p.basis));
    real.level.push_back(static_cast<int>(m));
    AMonomial ladder;
    append_a_ladder(ladder, j, k, -2 * d, static_cast<int>(m));
    real.lweights.push_back(
        lw_multiply(top, lw_from_A_monomial(cd, ladder)));
    auto& xp = real.xplus[m][static_cast<std::size_t>(j - 1)];
    auto& xm = real.xminus[m][static_cast<std::size_t>(j - 1)];
    const int mi = static_cast<int>(m);
    if (m > 0)
      xp.push_back({m - 1, RatQ::one(), qpow(k + 2 * d * (1 - mi))});
    const RatQ down_coeff =
        q_number(mi + 1, qj) * qj.pow(-mi) / (qj - qj.inverse());
    const std::size_t down = m + 1 < alloc ? m + 1 : kEscapeTarget;
    xm.push_back({down, down_coeff, qpow(k - 2 * d * mi)});
  }
  return real;
}

ModuleRealization realize_sl2_neg_prefund(const CartanData& cd,
                                          const RealizeParams& p) {
  if (cd.rank != 1)
    throw std::invalid_argument("sl2_neg_prefund: host must be A1");
  return realize_psi_tilde_inflation(cd, p);
}

ModuleRealization realize_sl2_kr(const CartanData& cd,
                                 const RealizeParams& p) {
  if (cd.rank != 1) throw std::invalid_argument("sl2_kr: host must be A1");
  if (p.length < 1) throw std::invalid_argument("sl2_kr: length must be >= 1");
  const int j = 1;
  const int d = cd.sym(j);
  const int k = p.spec;
  const int len = p.length;
  const RatQ qj = q_node(cd, j);

  ModuleRealization real;
  real.cd = cd;
  real.name = "sl2-kr";
  real.complete_degree = len;
  const LWeight top = lw_from_Y_monomial(
      cd, kr_highest_weight(cd, j, k + d * (1 - 2 * len), len));
  real.shift = lw_degree(cd, top);
  const std::size_t alloc = static_cast<std::size_t>(len) + 1;
  real.xplus.assign(alloc, std::vector<std::vector<ExpModeTerm>>(1));
  real.xminus = real.xplus;
  for (std::size_t m = 0; m < alloc; ++m) {
    real.labels.push_back("v" + std::to_string(m));
    real.inside.push_back(true);
    real.level.push_back(static_cast<int>(m));
    AMonomial ladder;
    append_a_ladder(ladder, j, k, -2 * d, static_cast<int>(m));
    real.lweights.push_back(lw_multiply(top, lw_from_A_monomial(cd, ladder)));
    const int mi = static_cast<int>(m);
    if (m > 0)
      real.xplus[m][0].push_back(
          {m - 1, RatQ::one(), qpow(k + 2 * d * (1 - mi))});
    if (mi < len)
      real.xminus[m][0].push_back(
          {m + 1, q_number(mi + 1, qj) * q_number(len - mi, qj),
           qpow(k - 2 * d * mi)});
  }
  return real;
}

ModuleRealization realize_pos_prefund(const CartanData& cd,
                                      const RealizeParams& p) {
  if (!cd.valid_node(p.node))
    throw std::invalid_argument("pos_prefund: bad node");
  ModuleRealization real;
  real.cd = cd;
  real.name = "pos-prefund";
  real.complete_degree = 1 << 20;
  real.labels = {"v0"};
  real.inside = {true};
  real.level = {0};
  real.lweights = {lw_psi(cd, p.node, p.spec)};
  real.shift = lw_degree(cd, real.lweights[0]);
  real.xplus.assign(1, std::vector<std::vector<ExpModeTerm>>(
                           static_cast<std::size_t>(cd.rank)));
  real.xminus = real.xplus;
  return real;
}

ModuleRealization realize_invertible(const CartanData& cd,
                                     const RealizeParams& p) {
  TorusWeight g = p.gamma;
  if (g.empty()) g = torus_identity(cd);
  if (static_cast<int>(g.size()) != cd.rank)
    throw std::invalid_argument("invertible: bad torus weight size");
  ModuleRealization real;
  real.cd = cd;
  real.name = "invertible";
  real.complete_degree = 1 << 20;
  real.labels = {"v0"};
  real.inside = {true};
  real.level = {0};
  real.lweights = {lw_torus(cd, g)};
  real.shift = coweight_zero(cd);
  real.xplus.assign(1, std::vector<std::vector<ExpModeTerm>>(
                           static_cast<std::size_t>(cd.rank)));
  real.xminus = real.xplus;
  return real;
}

ModuleRealization realize_sl3_pair_inflation(const CartanData& cd,
                                             const RealizeParams& p) {
  const int j1 = p.node, j2 = p.node2;
  const int k = p.spec;
  const LWeight psi_p = sl3_pair_psi_p(cd, j1, j2, k);  // checks the pair
  const int d = cd.sym(j1);
  const RatQ qj = q_node(cd, j1);
  const int bound = p.basis + 2;

  ModuleRealization real;
  real.cd = cd;
  real.name = "sl3-pair-inflation";
  real.complete_degree = bound;
  const LWeight top = lw_multiply(psi_p, lw_psi(cd, j1, k, -1));
  real.shift = lw_degree(cd, top);

  auto index_of = [](int n, int m) {
    return static_cast<std::size_t>(n * (n + 1) / 2 + m);
  };
  const std::size_t alloc = index_of(bound, bound) + 1;
  real.xplus.assign(alloc, std::vector<std::vector<ExpModeTerm>>(
                               static_cast<std::size_t>(cd.rank)));
  real.xminus = real.xplus;
  real.labels.resize(alloc);
  real.lweights.resize(alloc, lw_identity(cd));
  real.inside.resize(alloc, false);
  real.level.resize(alloc, 0);

  for (int n = 0; n <= bound; ++n) {
    for (int m = 0; m <= n; ++m) {
      const std::size_t idx = index_of(n, m);
      real.labels[idx] = pair_label(n, m);
      real.inside[idx] = n <= p.basis;
      real.level[idx] = n;
      AMonomial ladder;
      append_a_ladder(ladder, j1, k, -2 * d, n);
      append_a_ladder(ladder, j2, k + d, -2 * d, m);
      real.lweights[idx] = lw_multiply(top, lw_from_A_monomial(cd, ladder));

      auto& xp1 = real.xplus[idx][static_cast<std::size_t>(j1 - 1)];
      auto& xm1 = real.xminus[idx][static_cast<std::size_t>(j1 - 1)];
      auto& xp2 = real.xplus[idx][static_cast<std::size_t>(j2 - 1)];
      auto& xm2 = real.xminus[idx][static_cast<std::size_t>(j2 - 1)];
      if (n > m)
        xp1.push_back({index_of(n - 1, m), q_number(n - m, qj),
                       qpow(k + 2 * d * (1 - n))});
      xm1.push_back({n + 1 <= bound ? index_of(n + 1, m) : kEscapeTarget,
                     qj.pow(-n) / (qj - qj.inverse()), qpow(k - 2 * d * n)});
      if (m > 0)
        xp2.push_back({index_of(n, m - 1), RatQ::one(),
                       qpow(k + d * (3 - 2 * m))});
      if (m < n)
        xm2.push_back({index_of(n, m + 1),
                       q_number(m + 1, qj) * q_number(n - m, qj),
                       qpow(k + d * (1 - 2 * m))});
    }
  }
  return real;
}

ModuleRealization realize(const std::string& name, const CartanData& cd,
                          const RealizeParams& p) {
  if (name == "sl2-kr") return realize_sl2_kr(cd, p);
  if (name == "sl2-neg-prefund") return realize_sl2_neg_prefund(cd, p);
  if (name == "psi-tilde-inflation") return realize_psi_tilde_inflation(cd, p);
  if (name == "pos-prefund") return realize_pos_prefund(cd, p);
  if (name == "invertible") return realize_invertible(cd, p);
  if (name == "sl3-pair-inflation") return realize_sl3_pair_inflation(cd, p);
  throw std::invalid_argument("unknown realization " + name);
}

// ---------------------------------------------------------------------------
// Actions

void ModeVec::add(std::size_t label, const RatQ& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = c.emplace(label, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

ModeVec apply_mode(const ModuleRealization& real, Gen gen, int node, int r,
                   std::size_t label) {
  ModeVec out;
  const auto& table = (gen == Gen::XPlus ? real.xplus : real.xminus)
                          .at(label)
                          .at(static_cast<std::size_t>(node - 1));
  for (const auto& term : table) {
    if (term.target == kEscapeTarget) {
      out.escaped = true;
      continue;
    }
    out.add(term.target, term.coeff * term.base.pow(r));
  }
  return out;
}

ModeVec apply_mode(const ModuleRealization& real, Gen gen, int node, int r,
                   const ModeVec& v) {
  ModeVec out;
  out.escaped = v.escaped;
  for (const auto& [label, coeff] : v.c) {
    ModeVec w = apply_mode(real, gen, node, r, label);
    out.escaped = out.escaped || w.escaped;
    for (const auto& [l2, c2] : w.c) out.add(l2, coeff * c2);
  }
  return out;
}

ZSeries phi_series_eigen(const ModuleRealization& real, std::size_t label,
                         int node, Dir dir, int order) {
  auto [num, den] = lw_node_function(real.cd, real.lweights.at(label), node);
  return series_expand(num, den, dir, order);
}

RatQ extract_h_eigenvalue(const ModuleRealization& real, std::size_t label,
                          int node, int m) {
  if (m == 0) throw std::invalid_argument("extract_h_eigenvalue: m != 0");
  const RatQ qi = q_node(real.cd, node);
  const RatQ unit = qi - qi.inverse();
  if (m > 0) {
    ZSeries s = phi_series_eigen(real, label, node, Dir::InZ, m);
    ZSeries norm = s.scaled(s.coeff(0).inverse());
    return series_log(norm).coeff(m) / unit;
  }
  ZSeries s = phi_series_eigen(real, label, node, Dir::InZInv, -m);
  ZSeries norm = ZSeries(Dir::InZInv, 0,
                         s.scaled(s.coeff(0).inverse()).coeffs());
  return -series_log(norm).coeff(-m) / unit;
}

// ---------------------------------------------------------------------------
// Relation verification

const std::vector<RelationId>& all_relations() {
  static const std::vector<RelationId> all = {
      RelationId::CommPhi,    RelationId::PhiTX,       RelationId::Relhx,
      RelationId::Relxpxmphi, RelationId::XpmRelSupp,  RelationId::QSerre};
  return all;
}

std::string relation_name(RelationId id) {
  switch (id) {
    case RelationId::CommPhi: return "CommPhi";
    case RelationId::PhiTX: return "PhiTX";
    case RelationId::Relhx: return "Relhx";
    case RelationId::Relxpxmphi: return "Relxpxmphi";
    case RelationId::XpmRelSupp: return "xpmRelSupp";
    case RelationId::QSerre: return "qSerre";
  }
  return "?";
}

long RelationReport::total(long RelationStats::* field) const {
  long t = 0;
  for (const auto& [id, st] : stats) t += st.*field;
  return t;
}

namespace {

// Cached phi / h eigenvalue data per (label, node).
class PhiCache {
 public:
  PhiCache(const ModuleRealization& real, int modes, int hmodes)
      : real_(real), modes_(modes), hmodes_(hmodes),
        data_(real.size() * static_cast<std::size_t>(real.cd.rank)) {}

  // phi^+_{i,r} eigenvalue; zero for r < 0.
  RatQ plus(std::size_t label, int node, int r) {
    if (r < 0) return RatQ::zero();
    return entry(label, node).plus->coeff_at_exponent(r);
  }
  // phi^-_{i,r} eigenvalue; zero above the degree alpha_i(mu).
  RatQ minus(std::size_t label, int node, int r) {
    return entry(label, node).minus->coeff_at_exponent(r);
  }
  RatQ h(std::size_t label, int node, int m) {
    auto& e = entry(label, node);
    return m > 0 ? e.hplus.at(static_cast<std::size_t>(m - 1))
                 : e.hminus.at(static_cast<std::size_t>(-m - 1));
  }

 private:
  struct NodeData {
    bool ready = false;
    std::optional<ZSeries> plus, minus;
    std::vector<RatQ> hplus, hminus;
  };

  NodeData& entry(std::size_t label, int node) {
    NodeData& e = data_.at(label * static_cast<std::size_t>(real_.cd.rank) +
                           static_cast<std::size_t>(node - 1));
    if (e.ready) return e;
    auto [num, den] = lw_node_function(real_.cd, real_.lweights.at(label), node);
    const int plus_order = std::max(2 * modes_, hmodes_) + 1;
    e.plus = series_expand(num, den, Dir::InZ, plus_order);
    ZSeries probe = series_expand(num, den, Dir::InZInv, 0);
    const int minus_order =
        std::max({probe.lead() + 2 * modes_, hmodes_, 0}) + 1;
    e.minus = series_expand(num, den, Dir::InZInv, minus_order);

    const RatQ qi = q_node(real_.cd, node);
    const RatQ unit = qi - qi.inverse();
    ZSeries pnorm = e.plus->scaled(e.plus->coeff(0).inverse());
    ZSeries plog = series_log(pnorm);
    ZSeries mnorm =
        ZSeries(Dir::InZInv, 0, e.minus->scaled(e.minus->coeff(0).inverse()).coeffs());
    ZSeries mlog = series_log(mnorm);
    for (int m = 1; m <= hmodes_; ++m) {
      e.hplus.push_back(plog.coeff(m) / unit);
      e.hminus.push_back(-mlog.coeff(m) / unit);
    }
    e.ready = true;
    return e;
  }

  const ModuleRealization& real_;
  int modes_, hmodes_;
  std::vector<NodeData> data_;
};

class RelationChecker {
 public:
  RelationChecker(const ModuleRealization& real, const RelationWindow& win)
      : real_(real), win_(win), cache_(real, win.modes, win.hmodes) {}

  RelationReport run(const std::vector<RelationId>& rels) {
    for (RelationId id : rels) {
      report_.stats[id];  // ensure a row even when nothing is attempted
      switch (id) {
        case RelationId::CommPhi: comm_phi(); break;
        case RelationId::PhiTX: phi_t_x(); break;
        case RelationId::Relhx: rel_h_x(); break;
        case RelationId::Relxpxmphi: rel_xp_xm_phi(); break;
        case RelationId::XpmRelSupp: xpm_rel_supp(); break;
        case RelationId::QSerre: q_serre(); break;
      }
    }
    return report_;
  }

 private:
  std::vector<std::size_t> window_labels() const {
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l < real_.size(); ++l)
      if (real_.inside[l] && real_.level[l] <= win_.basis) out.push_back(l);
    return out;
  }

  template <typename SiteFn>
  void record(RelationId id, bool skipped, const ModeVec& diff,
              SiteFn&& site) {
    auto& st = report_.stats[id];
    ++st.attempted;
    if (skipped) {
      ++st.skipped;
      return;
    }
    if (diff.is_zero()) {
      ++st.passed;
      return;
    }
    ++st.failed;
    if (!report_.first_failure) {
      const std::size_t label = diff.c.begin()->first;
      report_.first_failure = RelationCounterexample{
          id, site(), "coefficient of " + real_.labels.at(label) + " differs"};
    }
  }

  static std::string site_str(const ModuleRealization& real, std::size_t l,
                              std::initializer_list<std::pair<const char*, int>> kv) {
    std::ostringstream os;
    os << real.labels.at(l);
    for (const auto& [k, v] : kv) os << ", " << k << "=" << v;
    return os.str();
  }

  ModeVec unit(std::size_t l) const {
    ModeVec v;
    v.add(l, RatQ::one());
    return v;
  }

  ModeVec scaled(const ModeVec& v, const RatQ& c) const {
    ModeVec out;
    out.escaped = v.escaped;
    for (const auto& [l, x] : v.c) out.add(l, x * c);
    return out;
  }

  ModeVec sub(const ModeVec& a, const ModeVec& b) const {
    ModeVec out = a;
    out.escaped = a.escaped || b.escaped;
    for (const auto& [l, x] : b.c) out.add(l, -x);
    return out;
  }

  // phi^{eps}_{i,r} applied to a vector (diagonal).
  ModeVec apply_phi(int eps, int node, int r, const ModeVec& v) {
    ModeVec out;
    out.escaped = v.escaped;
    for (const auto& [l, x] : v.c) {
      const RatQ c = eps > 0 ? cache_.plus(l, node, r) : cache_.minus(l, node, r);
      out.add(l, x * c);
    }
    return out;
  }

  ModeVec apply_h(int node, int m, const ModeVec& v) {
    ModeVec out;
    out.escaped = v.escaped;
    for (const auto& [l, x] : v.c) out.add(l, x * cache_.h(l, node, m));
    return out;
  }

  void comm_phi() {
    const auto labels = window_labels();
    for (std::size_t l : labels)
      for (int i = 1; i <= real_.cd.rank; ++i)
        for (int j = i; j <= real_.cd.rank; ++j)
          for (int ei : {+1, -1})
            for (int ej : {+1, -1})
              for (int r = -win_.modes; r <= win_.modes; ++r)
                for (int s = -win_.modes; s <= win_.modes; ++s) {
                  ModeVec lhs = apply_phi(ei, i, r, apply_phi(ej, j, s, unit(l)));
                  ModeVec rhs = apply_phi(ej, j, s, apply_phi(ei, i, r, unit(l)));
                  record(RelationId::CommPhi, false, sub(lhs, rhs), [&] {
                    return site_str(real_, l, {{"i", i}, {"j", j}, {"r", r}, {"s", s}, {"ei", ei}, {"ej", ej}});
                  });
                }
  }

  void phi_t_x() {
    const auto labels = window_labels();
    for (std::size_t l : labels)
      for (int i = 1; i <= real_.cd.rank; ++i)
        for (int j = 1; j <= real_.cd.rank; ++j)
          for (int sign : {+1, -1})
            for (int r = -win_.modes; r <= win_.modes; ++r) {
              const Gen gen = sign > 0 ? Gen::XPlus : Gen::XMinus;
              const RatQ qfac = qpow(sign * real_.cd.sym(i) * real_.cd.cartan(i, j));
              const int shift_i =
                  pair_alpha_coweight(real_.cd, real_.shift, i);
              {
                ModeVec xv = apply_mode(real_, gen, j, r, unit(l));
                ModeVec lhs = apply_phi(+1, i, 0, xv);
                ModeVec rhs = scaled(apply_mode(real_, gen, j, r,
                                                apply_phi(+1, i, 0, unit(l))),
                                     qfac);
                record(RelationId::PhiTX, lhs.escaped || rhs.escaped,
                       sub(lhs, rhs), [&] {
                         return site_str(real_, l, {{"i", i}, {"j", j}, {"r", r}, {"sign", sign}, {"phi", +1}});
                       });
              }
              {
                ModeVec xv = apply_mode(real_, gen, j, r, unit(l));
                ModeVec lhs = apply_phi(-1, i, shift_i, xv);
                ModeVec rhs = scaled(
                    apply_mode(real_, gen, j, r,
                               apply_phi(-1, i, shift_i, unit(l))),
                    qfac.inverse());
                record(RelationId::PhiTX, lhs.escaped || rhs.escaped,
                       sub(lhs, rhs), [&] {
                         return site_str(real_, l, {{"i", i}, {"j", j}, {"r", r}, {"sign", sign}, {"phi", -1}});
                       });
              }
            }
  }

  void rel_h_x() {
    const auto labels = window_labels();
    for (std::size_t l : labels)
      for (int i = 1; i <= real_.cd.rank; ++i)
        for (int j = 1; j <= real_.cd.rank; ++j)
          for (int sign : {+1, -1})
            for (int m = -win_.hmodes; m <= win_.hmodes; ++m) {
              if (m == 0) continue;
              for (int r = -win_.modes; r <= win_.modes; ++r) {
                if (std::abs(m + r) > win_.modes) continue;
                const Gen gen = sign > 0 ? Gen::XPlus : Gen::XMinus;
                ModeVec xv = apply_mode(real_, gen, j, r, unit(l));
                ModeVec lhs =
                    sub(apply_h(i, m, xv),
                        apply_mode(real_, gen, j, r, apply_h(i, m, unit(l))));
                const RatQ coeff =
                    q_int(m * real_.cd.cartan(i, j), q_node(real_.cd, i)) *
                    RatQ(rat(sign, m));
                ModeVec rhs =
                    scaled(apply_mode(real_, gen, j, m + r, unit(l)), coeff);
                record(RelationId::Relhx, lhs.escaped || rhs.escaped,
                       sub(lhs, rhs), [&] {
                         return site_str(real_, l, {{"i", i}, {"j", j}, {"m", m}, {"r", r}, {"sign", sign}});
                       });
              }
            }
  }

  void rel_xp_xm_phi() {
    const auto labels = window_labels();
    for (std::size_t l : labels)
      for (int i = 1; i <= real_.cd.rank; ++i)
        for (int j = 1; j <= real_.cd.rank; ++j)
          for (int r = -win_.modes; r <= win_.modes; ++r)
            for (int s = -win_.modes; s <= win_.modes; ++s) {
              const RatQ qi = q_node(real_.cd, i);
              ModeVec lhs = scaled(
                  sub(apply_mode(real_, Gen::XPlus, i, r,
                                 apply_mode(real_, Gen::XMinus, j, s, unit(l))),
                      apply_mode(real_, Gen::XMinus, j, s,
                                 apply_mode(real_, Gen::XPlus, i, r, unit(l)))),
                  qi - qi.inverse());
              ModeVec rhs;
              if (i == j)
                rhs = sub(apply_phi(+1, i, r + s, unit(l)),
                          apply_phi(-1, i, r + s, unit(l)));
              record(RelationId::Relxpxmphi, lhs.escaped || rhs.escaped,
                     sub(lhs, rhs), [&] {
                       return site_str(real_, l, {{"i", i}, {"j", j}, {"r", r}, {"s", s}});
                     });
            }
  }

  void xpm_rel_supp() {
    const auto labels = window_labels();
    for (std::size_t l : labels)
      for (int i = 1; i <= real_.cd.rank; ++i)
        for (int j = 1; j <= real_.cd.rank; ++j)
          for (int sign : {+1, -1})
            for (int r = -win_.modes; r < win_.modes; ++r)
              for (int s = -win_.modes; s < win_.modes; ++s) {
                const Gen gen = sign > 0 ? Gen::XPlus : Gen::XMinus;
                const RatQ qfac =
                    qpow(sign * real_.cd.sym(i) * real_.cd.cartan(i, j));
                auto xx = [&](int ni, int ri, int nj, int rj) {
                  return apply_mode(real_, gen, ni, ri,
                                    apply_mode(real_, gen, nj, rj, unit(l)));
                };
                ModeVec lhs =
                    sub(xx(i, r + 1, j, s), scaled(xx(j, s, i, r + 1), qfac));
                ModeVec rhs =
                    sub(scaled(xx(i, r, j, s + 1), qfac), xx(j, s + 1, i, r));
                record(RelationId::XpmRelSupp, lhs.escaped || rhs.escaped,
                       sub(lhs, rhs), [&] {
                         return site_str(real_, l, {{"i", i}, {"j", j}, {"r", r}, {"s", s}, {"sign", sign}});
                       });
              }
  }

  void q_serre() {
    const auto labels = window_labels();
    for (int i = 1; i <= real_.cd.rank; ++i) {
      for (int j = 1; j <= real_.cd.rank; ++j) {
        if (i == j) continue;
        const int p = 1 - real_.cd.cartan(i, j);
        const RatQ qi = q_node(real_.cd, i);
        std::vector<RatQ> binom;
        for (int t = 0; t <= p; ++t) binom.push_back(q_binomial(p, t, qi));
        // Mode tuples (r_1, ..., r_p) and r'.
        std::vector<int> tuple(static_cast<std::size_t>(p), -win_.modes);
        const long tuple_count = [&] {
          long n = 1;
          for (int t = 0; t < p; ++t) n *= 2 * win_.modes + 1;
          return n;
        }();
        for (long ti = 0; ti < tuple_count; ++ti) {
          long rest = ti;
          for (int t = 0; t < p; ++t) {
            tuple[static_cast<std::size_t>(t)] =
                -win_.modes + static_cast<int>(rest % (2 * win_.modes + 1));
            rest /= 2 * win_.modes + 1;
          }
          for (int rp = -win_.modes; rp <= win_.modes; ++rp) {
            for (int sign : {+1, -1}) {
              const Gen gen = sign > 0 ? Gen::XPlus : Gen::XMinus;
              for (std::size_t l : labels) {
                ModeVec acc;
                bool skipped = false;
                std::vector<int> perm(static_cast<std::size_t>(p));
                std::iota(perm.begin(), perm.end(), 0);
                do {
                  for (int cut = 0; cut <= p; ++cut) {
                    // Word applied right to left:
                    // x_{i,r_{perm(1)}} ... x_{i,r_{perm(cut)}} x_{j,r'}
                    //   x_{i,r_{perm(cut+1)}} ... x_{i,r_{perm(p)}}
                    ModeVec v = unit(l);
                    for (int t = p - 1; t >= cut; --t)
                      v = apply_mode(real_, gen, i,
                                     tuple[static_cast<std::size_t>(
                                         perm[static_cast<std::size_t>(t)])],
                                     v);
                    v = apply_mode(real_, gen, j, rp, v);
                    for (int t = cut - 1; t >= 0; --t)
                      v = apply_mode(real_, gen, i,
                                     tuple[static_cast<std::size_t>(
                                         perm[static_cast<std::size_t>(t)])],
                                     v);
                    skipped = skipped || v.escaped;
                    const RatQ c = (cut % 2 == 0 ? RatQ::one() : RatQ(-1)) *
                                   binom[static_cast<std::size_t>(cut)];
                    for (const auto& [lbl, x] : v.c) acc.add(lbl, x * c);
                  }
                } while (std::next_permutation(perm.begin(), perm.end()));
                record(RelationId::QSerre, skipped, acc, [&] {
                  return site_str(real_, l, {{"i", i}, {"j", j}, {"r'", rp}, {"sign", sign}});
                });
              }
            }
          }
        }
      }
    }
  }

  const ModuleRealization& real_;
  RelationWindow win_;
  PhiCache cache_;
  RelationReport report_;
};

}  // namespace

RelationReport verify_definition_relations(
    const ModuleRealization& real, const RelationWindow& window,
    const std::vector<RelationId>& relations) {
  return RelationChecker(real, window).run(relations);
}

// ---------------------------------------------------------------------------
// q-characters from realizations

TruncatedQChar module_qchar(const ModuleRealization& real, int depth) {
  if (depth > real.complete_degree)
    throw std::invalid_argument(
        "module_qchar: depth exceeds the allocated basis coverage");
  TruncatedQChar c;
  c.top = real.top();
  c.depth = depth;
  const LWeight inv_top = lw_inverse(real.top());
  for (std::size_t l = 0; l < real.size(); ++l) {
    const AMonomial m =
        lw_to_A_monomial(real.cd, lw_multiply(real.lweights[l], inv_top));
    if (a_degree(m) <= depth) c.terms[m] += 1;
  }
  return c;
}

// ---------------------------------------------------------------------------
// Drinfeld tensor and the R-matrix example

ModuleRealization drinfeld_tensor(const ModuleRealization& a,
                                  const ModuleRealization& b) {
  if (!(a.cd == b.cd))
    throw std::invalid_argument("drinfeld_tensor: diagram mismatch");
  const std::size_t nb = b.size();
  ModuleRealization t;
  t.cd = a.cd;
  t.name = a.name + "(x)" + b.name;
  t.shift = coweight_add(a.shift, b.shift);
  t.complete_degree = std::min(a.complete_degree, b.complete_degree);
  const std::size_t total = a.size() * nb;
  t.labels.resize(total);
  t.lweights.resize(total, lw_identity(t.cd));
  t.inside.resize(total, false);
  t.level.resize(total, 0);
  t.xplus.assign(total, std::vector<std::vector<ExpModeTerm>>(
                            static_cast<std::size_t>(t.cd.rank)));
  t.xminus = t.xplus;

  auto eval_phi = [&](const ModuleRealization& real, std::size_t label,
                      int node, const RatQ& base) {
    try {
      return lw_node_eval(real.cd, real.lweights.at(label), node,
                          base.inverse());
    } catch (const PoleError&) {
      throw PoleError("drinfeld_tensor: phi pole at " +
                      real.labels.at(label) + ", node " +
                      std::to_string(node) + " (non-generic parameters)");
    }
  };

  for (std::size_t la = 0; la < a.size(); ++la) {
    for (std::size_t lb = 0; lb < nb; ++lb) {
      const std::size_t idx = la * nb + lb;
      t.labels[idx] = a.labels[la] + "(x)" + b.labels[lb];
      t.inside[idx] = a.inside[la] && b.inside[lb];
      t.level[idx] = std::max(a.level[la], b.level[lb]);
      t.lweights[idx] = lw_multiply(a.lweights[la], b.lweights[lb]);
      for (int i = 1; i <= t.cd.rank; ++i) {
        const std::size_t ni = static_cast<std::size_t>(i - 1);
        auto& xp = t.xplus[idx][ni];
        auto& xm = t.xminus[idx][ni];
        // x^+ = x^+ (x) 1 + phi^- (x) x^+
        for (const auto& term : a.xplus[la][ni])
          xp.push_back({term.target == kEscapeTarget ? kEscapeTarget
                                                     : term.target * nb + lb,
                        term.coeff, term.base});
        for (const auto& term : b.xplus[lb][ni]) {
          const RatQ scale = eval_phi(a, la, i, term.base);
          if (scale.is_zero()) continue;
          xp.push_back({term.target == kEscapeTarget ? kEscapeTarget
                                                     : la * nb + term.target,
                        term.coeff * scale, term.base});
        }
        // x^- = 1 (x) x^- + x^- (x) phi^+
        for (const auto& term : b.xminus[lb][ni])
          xm.push_back({term.target == kEscapeTarget ? kEscapeTarget
                                                     : la * nb + term.target,
                        term.coeff, term.base});
        for (const auto& term : a.xminus[la][ni]) {
          const RatQ scale = eval_phi(b, lb, i, term.base);
          if (scale.is_zero()) continue;
          xm.push_back({term.target == kEscapeTarget ? kEscapeTarget
                                                     : term.target * nb + lb,
                        term.coeff * scale, term.base});
        }
      }
    }
  }
  return t;
}

RatQ rmatrix_gamma(int spec, int l, int m) {
  RatQ num = qpow(spec * l - l * m);
  for (int kp = 1; kp <= m; ++kp)
    num *= RatQ::one() - qpow(spec + 2 * kp - 1);
  if (num.is_zero()) return RatQ::zero();
  RatQ den = RatQ::one();
  for (int s = 1; s <= l; ++s) {
    const RatQ factor = qpow(spec) - qpow(2 * (s - m) - 1);
    if (factor.is_zero())
      throw PoleError("gamma pole at (l,m,s) = (" + std::to_string(l) + "," +
                      std::to_string(m) + "," + std::to_string(s) + ")");
    den *= factor;
  }
  return num / den;
}

RMatrixReport rmatrix_check(int spec, const RMatrixWindow& window) {
  RMatrixReport rep;
  rep.spec = spec;
  rep.generic = spec % 2 == 0;
  const int g = window.grid;

  rep.gamma.assign(static_cast<std::size_t>(g) + 2,
                   std::vector<RatQ>(static_cast<std::size_t>(g) + 2));
  for (int l = 0; l <= g + 1; ++l)
    for (int m = 0; m <= g + 1; ++m)
      rep.gamma[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] =
          rmatrix_gamma(spec, l, m);
  if (!rep.generic) return rep;  // vanishing pattern only

  const CartanData cd = dynkin_data(DynkinType::A, 2);
  RealizeParams pa;
  pa.node = 1;
  pa.spec = spec;
  pa.basis = g + 1;
  RealizeParams pb;
  pb.node = 2;
  pb.spec = 0;
  pb.basis = g + 1;
  const ModuleRealization va = realize_psi_tilde_inflation(cd, pa);
  const ModuleRealization vb = realize_psi_tilde_inflation(cd, pb);
  const ModuleRealization t1 = drinfeld_tensor(va, vb);
  const ModuleRealization t2 = drinfeld_tensor(vb, va);
  const std::size_t na = va.size(), nb = vb.size();

  auto psi_map = [&](const ModeVec& v) {
    // v_l (x) v'_m -> gamma_{l,m} v'_m (x) v_l
    ModeVec out;
    out.escaped = v.escaped;
    for (const auto& [idx, c] : v.c) {
      const std::size_t l = idx / nb, m = idx % nb;
      if (l > static_cast<std::size_t>(g) + 1 ||
          m > static_cast<std::size_t>(g) + 1)
        throw std::logic_error("rmatrix grid too small");
      out.add(m * na + l, c * rep.gamma[l][m]);
    }
    return out;
  };

  PhiCache cache1(t1, window.modes, 1), cache2(t2, window.modes, 1);
  auto check = [&](const ModeVec& lhs, const ModeVec& rhs,
                   const std::string& site) {
    ++rep.attempted;
    ModeVec diff = lhs;
    for (const auto& [l, c] : rhs.c) diff.add(l, -c);
    if (diff.c.empty()) return;
    ++rep.failed;
    if (!rep.first_failure) rep.first_failure = site;
  };

  for (int l = 0; l <= g; ++l) {
    for (int m = 0; m <= g; ++m) {
      const std::size_t src1 = static_cast<std::size_t>(l) * nb +
                               static_cast<std::size_t>(m);
      const std::size_t src2 = static_cast<std::size_t>(m) * na +
                               static_cast<std::size_t>(l);
      ModeVec u1;
      u1.add(src1, RatQ::one());
      ModeVec pu;  // psi(u)
      pu.add(src2, rep.gamma[static_cast<std::size_t>(l)]
                            [static_cast<std::size_t>(m)]);
      for (int i = 1; i <= 2; ++i) {
        for (int r = -window.modes; r <= window.modes; ++r) {
          for (Gen gen : {Gen::XPlus, Gen::XMinus}) {
            const ModeVec lhs = psi_map(apply_mode(t1, gen, i, r, u1));
            const ModeVec rhs = apply_mode(t2, gen, i, r, pu);
            std::ostringstream site;
            site << "x" << (gen == Gen::XPlus ? "+" : "-") << "[" << i << ","
                 << r << "] at (" << l << "," << m << ")";
            check(lhs, rhs, site.str());
          }
          for (int eps : {+1, -1}) {
            const RatQ c1 = eps > 0 ? cache1.plus(src1, i, r)
                                    : cache1.minus(src1, i, r);
            const RatQ c2 = eps > 0 ? cache2.plus(src2, i, r)
                                    : cache2.minus(src2, i, r);
            ModeVec lhs = psi_map(scaled_vec(u1, c1));
            ModeVec rhs = scaled_vec(pu, c2);
            std::ostringstream site;
            site << "phi" << (eps > 0 ? "+" : "-") << "[" << i << "," << r
                 << "] at (" << l << "," << m << ")";
            check(lhs, rhs, site.str());
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace qshift
