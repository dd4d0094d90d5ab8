#include "centsplit/rootdata.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace centsplit {

int CartanType::semisimple_rank() const {
  int n = 0;
  for (auto& c : components) n += c.rank;
  return n;
}

std::string CartanType::name() const {
  std::string s;
  for (size_t i = 0; i < components.size(); ++i) {
    if (i) s += 'x';
    s += components[i].family;
    s += std::to_string(components[i].rank);
  }
  if (central_rank > 0) {
    if (!s.empty()) s += 'x';
    s += 'T';
    s += std::to_string(central_rank);
  }
  if (s.empty()) s = "T0";
  return s;
}

bool CartanType::operator==(const CartanType& o) const {
  if (central_rank != o.central_rank ||
      components.size() != o.components.size())
    return false;
  for (size_t i = 0; i < components.size(); ++i)
    if (components[i].family != o.components[i].family ||
        components[i].rank != o.components[i].rank)
      return false;
  return true;
}

namespace {

void validate_component(const CartanComponent& c) {
  bool ok = false;
  switch (c.family) {
    case 'A': ok = c.rank >= 1; break;
    case 'B': case 'C': ok = c.rank >= 2; break;
    case 'D': ok = c.rank >= 3; break;
    case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
    case 'F': ok = c.rank == 4; break;
    case 'G': ok = c.rank == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument("invalid Cartan component " +
                                std::string(1, c.family) +
                                std::to_string(c.rank));
}

// Edges (i,j,cij,cji) with cij = <alpha_j, alpha_i^vee>, 0-based local
// indices, paper labelling (B/C indexed from the double bond, D forking
// at node 3).
std::vector<std::array<std::int64_t, 4>> component_edges(
    const CartanComponent& c) {
  std::vector<std::array<std::int64_t, 4>> e;
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) e.push_back({i, i + 1, -1, -1});
  };
  switch (c.family) {
    case 'A':
      chain(0, c.rank - 1);
      break;
    case 'B':  // node 1 short
      e.push_back({0, 1, -2, -1});
      chain(1, c.rank - 1);
      break;
    case 'C':  // node 1 long
      e.push_back({0, 1, -1, -2});
      chain(1, c.rank - 1);
      break;
    case 'D':
      e.push_back({0, 2, -1, -1});
      e.push_back({1, 2, -1, -1});
      chain(2, c.rank - 1);
      break;
    case 'E':
      e.push_back({0, 2, -1, -1});
      e.push_back({1, 3, -1, -1});
      chain(2, c.rank - 1);
      break;
    case 'F':
      e.push_back({0, 1, -1, -1});
      e.push_back({1, 2, -2, -1});  // <alpha_3, alpha_2^vee> = -1
      e.push_back({2, 3, -1, -1});
      break;
    case 'G':  // node 1 short
      e.push_back({0, 1, -3, -1});
      break;
  }
  return e;
}

}  // namespace

RootDatum::RootDatum(CartanType type, Lattice Y, Int p)
    : type_(std::move(type)), Y_(std::move(Y)),
      Q_(Lattice::standard(1)), P_(Lattice::standard(1)), p_(std::move(p)) {
  for (auto& c : type_.components) validate_component(c);
  if (type_.central_rank < 0) throw std::invalid_argument("central rank < 0");
  if (p_ < 0 || (p_ > 0 && p_ == 1))
    throw std::invalid_argument("p must be 0 or prime");
  n_ss_ = type_.semisimple_rank();
  const int n = rank();
  if (Y_.dim() != n)
    throw std::invalid_argument("Y has wrong dimension for type " +
                                type_.name());
  build_cartan();
  enumerate_roots();
  build_coweights();
  Q_ = Lattice::standard(n);
  {
    MatQ pw(n, n);
    pw.setZero();
    for (int j = 0; j < n_ss_; ++j) pw.row(j) = coweights_[j].transpose();
    for (int j = n_ss_; j < n; ++j) pw(j, j) = 1;
    P_ = Lattice(std::move(pw));
  }
  connection_index_ = P_.index_of(Q_);
  // Q^vee <= Y <= P^vee (+ central block).
  for (int i = 0; i < n; ++i) {
    VecQ e = VecQ::Zero(n);
    e[i] = 1;
    if (!Y_.contains(e))
      throw std::invalid_argument("Y does not contain the coroot lattice");
  }
  for (int i = 0; i < n; ++i) {
    VecQ row(n);
    for (int j = 0; j < n; ++j)
      row[j] = Rat(Y_.canonical_basis()(i, j)) / Rat(Y_.denom());
    if (!P_.contains(row))
      throw std::invalid_argument(
          "Y is not contained in the coweight lattice");
  }
}

void RootDatum::build_cartan() {
  cartan_ = MatI::Zero(n_ss_, n_ss_);
  node_component_.assign(n_ss_, 0);
  comp_range_.clear();
  int off = 0;
  for (size_t k = 0; k < type_.components.size(); ++k) {
    const auto& c = type_.components[k];
    comp_range_.emplace_back(off, off + c.rank);
    for (int i = 0; i < c.rank; ++i) {
      node_component_[off + i] = static_cast<int>(k);
      cartan_(off + i, off + i) = 2;
    }
    for (auto& e : component_edges(c)) {
      cartan_(off + e[0], off + e[1]) = e[2];
      cartan_(off + e[1], off + e[0]) = e[3];
    }
    off += c.rank;
  }
}

void RootDatum::enumerate_roots() {
  roots_.clear();
  root_lookup_.clear();
  std::unordered_map<VecI, VecI, VecIHash, VecIEq> seen;  // root -> coroot
  std::deque<VecI> queue;
  for (int i = 0; i < n_ss_; ++i) {
    VecI r = VecI::Zero(n_ss_), cr = VecI::Zero(n_ss_);
    r[i] = 1;
    cr[i] = 1;
    seen.emplace(r, cr);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    VecI r = queue.front();
    queue.pop_front();
    VecI cr = seen.at(r);
    for (int i = 0; i < n_ss_; ++i) {
      std::int64_t pr = 0, pc = 0;
      for (int j = 0; j < n_ss_; ++j) {
        pr += cartan_(i, j) * r[j];   // <r, alpha_i^vee>
        pc += cartan_(j, i) * cr[j];  // <alpha_i, r^vee>
      }
      VecI r2 = r, cr2 = cr;
      r2[i] -= pr;
      cr2[i] -= pc;
      if (seen.emplace(r2, cr2).second) queue.push_back(r2);
    }
  }
  for (auto& [r, cr] : seen) {
    bool pos = true, neg = true;
    for (int j = 0; j < n_ss_; ++j) {
      if (r[j] < 0) pos = false;
      if (r[j] > 0) neg = false;
    }
    if (!pos && !neg)
      throw std::logic_error("root with mixed signs in closure");
    int comp = 0;
    for (int j = 0; j < n_ss_; ++j)
      if (r[j] != 0) {
        comp = node_component_[j];
        break;
      }
    std::int64_t h = r.sum();
    roots_.push_back(Root{r, cr, pos, comp, h});
  }
  std::sort(roots_.begin(), roots_.end(), [](const Root& a, const Root& b) {
    if (a.positive != b.positive) return a.positive;
    if (a.height != b.height) return a.height < b.height;
    return std::lexicographical_compare(a.root.data(),
                                        a.root.data() + a.root.size(),
                                        b.root.data(),
                                        b.root.data() + b.root.size());
  });
  for (size_t i = 0; i < roots_.size(); ++i)
    root_lookup_.emplace(roots_[i].root, static_cast<int>(i));

  const int n = rank();
  rho_check_ = VecQ::Zero(n);
  for (auto& r : roots_)
    if (r.positive)
      for (int j = 0; j < n_ss_; ++j) rho_check_[j] += Rat(r.coroot[j], 2);

  highest_.assign(type_.components.size(), -1);
  for (size_t i = 0; i < roots_.size(); ++i) {
    const Root& r = roots_[i];
    if (!r.positive) continue;
    int k = r.component;
    if (highest_[k] < 0 || r.height > roots_[highest_[k]].height)
      highest_[k] = static_cast<int>(i);
  }
  minuscule_.clear();
  for (int j = 0; j < n_ss_; ++j) {
    const Root& th = roots_[highest_[node_component_[j]]];
    if (th.root[j] == 1) minuscule_.push_back(j);
  }
}

void RootDatum::build_coweights() {
  const int n = rank();
  coweights_.assign(n_ss_, VecQ::Zero(n));
  for (size_t k = 0; k < type_.components.size(); ++k) {
    auto [b, e] = comp_range_[k];
    int m = e - b;
    MatQ block(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) block(i, j) = Rat(cartan_(b + i, b + j));
    MatQ inv = rational_inverse(block);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i) coweights_[b + j][b + i] = inv(j, i);
  }
}

int RootDatum::root_index(const VecI& root_coords) const {
  auto it = root_lookup_.find(root_coords);
  return it == root_lookup_.end() ? -1 : it->second;
}

Rat RootDatum::pairing(const VecI& root_coords, const VecQ& lambda) const {
  if (lambda.size() != rank())
    throw std::invalid_argument("pairing: vector dimension mismatch");
  Rat acc = 0;
  for (int j = 0; j < n_ss_; ++j) {
    std::int64_t cj = 0;
    for (int i = 0; i < n_ss_; ++i) cj += cartan_(j, i) * root_coords[i];
    if (cj != 0) acc += Rat(cj) * lambda[j];
  }
  return acc;
}

std::int64_t RootDatum::root_coroot_pairing(const VecI& root_coords,
                                            const VecI& coroot_coords) const {
  std::int64_t acc = 0;
  for (int j = 0; j < n_ss_; ++j) {
    std::int64_t cj = 0;
    for (int i = 0; i < n_ss_; ++i) cj += cartan_(j, i) * root_coords[i];
    acc += cj * coroot_coords[j];
  }
  return acc;
}

VecQ RootDatum::rho_check_parabolic(const std::vector<int>& I) const {
  std::vector<bool> in(n_ss_, false);
  for (int j : I) in.at(j) = true;
  VecQ out = VecQ::Zero(rank());
  for (auto& r : roots_) {
    if (!r.positive) continue;
    bool supported = true;
    for (int j = 0; j < n_ss_ && supported; ++j)
      if (r.root[j] != 0 && !in[j]) supported = false;
    if (supported)
      for (int j = 0; j < n_ss_; ++j) out[j] += Rat(r.coroot[j], 2);
  }
  return out;
}

VecQ RootDatum::torus_class(const VecQ& v) const {
  return Y_.quotient_canonical(Y_.p_prime_part(v, p_));
}

MatQ rational_inverse(const MatQ& m) {
  const Eigen::Index n = m.rows();
  MatQ a = m, inv = MatQ::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) inv(i, i) = 1;
  for (Eigen::Index j = 0; j < n; ++j) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = j; i < n; ++i)
      if (a(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("singular matrix");
    if (piv != j) {
      a.row(piv).swap(a.row(j));
      inv.row(piv).swap(inv.row(j));
    }
    Rat d = a(j, j);
    for (Eigen::Index k = 0; k < n; ++k) {
      a(j, k) /= d;
      inv(j, k) /= d;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == j || a(i, j) == 0) continue;
      Rat f = a(i, j);
      a.row(i) -= a.row(j) * f;
      inv.row(i) -= inv.row(j) * f;
    }
  }
  return inv;
}

std::vector<std::shared_ptr<RootDatum>> IsogenyFamily::all() const {
  std::vector<std::shared_ptr<RootDatum>> out;
  out.push_back(sc);
  for (auto& d : intermediate) out.push_back(d);
  out.push_back(ad);
  return out;
}

IsogenyFamily standard_isogenies(const CartanType& type, Int p) {
  const int n = type.semisimple_rank() + type.central_rank;
  IsogenyFamily fam;
  fam.sc = std::make_shared<RootDatum>(type, Lattice::standard(n), p);
  const Lattice& P = fam.sc->coweight_lattice();
  const Lattice& Q = fam.sc->coroot_lattice();
  MatQ pw(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      pw(i, j) = Rat(P.canonical_basis()(i, j)) / Rat(P.denom());
  fam.ad = std::make_shared<RootDatum>(type, Lattice(pw), p);

  // Elements of P/Q as canonical representatives.
  std::vector<VecQ> elems;
  auto find_elem = [&](const VecQ& v) -> int {
    for (size_t i = 0; i < elems.size(); ++i)
      if (elems[i] == v) return static_cast<int>(i);
    return -1;
  };
  elems.push_back(VecQ::Zero(n));
  for (size_t head = 0; head < elems.size(); ++head) {
    for (int g = 0; g < n; ++g) {
      VecQ cand = elems[head] + pw.row(g).transpose();
      cand = Q.quotient_canonical(cand);
      if (find_elem(cand) < 0) elems.push_back(cand);
    }
  }
  const int f = static_cast<int>(elems.size());
  if (f > 16)
    throw std::invalid_argument("connection index too large for isogeny scan");
  std::vector<std::vector<int>> add(f, std::vector<int>(f));
  for (int i = 0; i < f; ++i)
    for (int j = 0; j < f; ++j)
      add[i][j] = find_elem(Q.quotient_canonical(elems[i] + elems[j]));

  std::set<unsigned> subgroups;
  for (unsigned mask = 1; mask < (1u << f); ++mask) {
    if (!(mask & 1u)) continue;  // must contain 0
    bool closed = true;
    for (int i = 0; i < f && closed; ++i)
      for (int j = i; j < f && closed; ++j)
        if ((mask >> i & 1u) && (mask >> j & 1u) &&
            !(mask >> add[i][j] & 1u))
          closed = false;
    if (closed) subgroups.insert(mask);
  }
  for (unsigned mask : subgroups) {
    int size = __builtin_popcount(mask);
    if (size == 1 || size == f) continue;
    MatQ gens(n + size, n);
    gens.setZero();
    for (int i = 0; i < n; ++i) gens(i, i) = 1;
    int row = n;
    for (int i = 0; i < f; ++i)
      if (mask >> i & 1u) gens.row(row++) = elems[i].transpose();
    MatZ scaled;
    Int d = 1;
    for (Eigen::Index i = 0; i < gens.rows(); ++i)
      for (int j = 0; j < n; ++j) d = lcm_int(d, den(gens(i, j)));
    scaled.resize(gens.rows(), n);
    for (Eigen::Index i = 0; i < gens.rows(); ++i)
      for (int j = 0; j < n; ++j) scaled(i, j) = num(gens(i, j) * Rat(d));
    MatZ h = hermite_normal_form(std::move(scaled));
    MatQ basis(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) basis(i, j) = Rat(h(i, j)) / Rat(d);
    fam.intermediate.push_back(
        std::make_shared<RootDatum>(type, Lattice(basis), p));
  }
  std::sort(fam.intermediate.begin(), fam.intermediate.end(),
            [](const auto& a, const auto& b) {
              const MatZ &ha = a->Y().canonical_basis(),
                         &hb = b->Y().canonical_basis();
              if (a->Y().denom() != b->Y().denom())
                return a->Y().denom() < b->Y().denom();
              return std::lexicographical_compare(
                  ha.data(), ha.data() + ha.size(), hb.data(),
                  hb.data() + hb.size());
            });
  return fam;
}

CartanType parse_cartan_type(const std::string& s) {
  CartanType t;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('x', pos);
    std::string tok =
        s.substr(pos, next == std::string::npos ? next : next - pos);
    if (tok.size() < 2)
      throw std::invalid_argument("bad type token '" + tok + "'");
    char fam = tok[0];
    int r;
    try {
      r = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad rank in token '" + tok + "'");
    }
    if (fam == 'T') {
      t.central_rank += r;
    } else {
      CartanComponent c{fam, r};
      validate_component(c);
      t.components.push_back(c);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return t;
}

std::shared_ptr<RootDatum> parse_datum(const std::string& s) {
  std::string body = s;
  Int p = 0;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    std::string opt = body.substr(semi + 1);
    body = body.substr(0, semi);
    if (opt.rfind("p=", 0) != 0)
      throw std::invalid_argument("bad datum option '" + opt + "'");
    p = Int(opt.substr(2));
  }
  std::string type_str = body, iso = "sc";
  if (auto colon = body.find(':'); colon != std::string::npos) {
    type_str = body.substr(0, colon);
    iso = body.substr(colon + 1);
  }
  CartanType type = parse_cartan_type(type_str);
  const int n = type.semisimple_rank() + type.central_rank;
  if (iso == "sc")
    return std::make_shared<RootDatum>(type, Lattice::standard(n), p);
  if (iso == "ad") return standard_isogenies(type, p).ad;
  if (iso.rfind("lattice(", 0) == 0 && iso.back() == ')') {
    std::string rows = iso.substr(8, iso.size() - 9);
    std::vector<VecQ> gens;
    size_t pos = 0;
    while (pos <= rows.size()) {
      size_t bar = rows.find('|', pos);
      std::string row =
          rows.substr(pos, bar == std::string::npos ? bar : bar - pos);
      std::vector<Rat> entries;
      size_t p2 = 0;
      while (p2 <= row.size()) {
        size_t comma = row.find(',', p2);
        entries.push_back(parse_rational(
            row.substr(p2, comma == std::string::npos ? comma : comma - p2)));
        if (comma == std::string::npos) break;
        p2 = comma + 1;
      }
      if (static_cast<int>(entries.size()) != n)
        throw std::invalid_argument("lattice row has wrong dimension");
      VecQ v(n);
      for (int i = 0; i < n; ++i) v[i] = entries[i];
      gens.push_back(v);
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    MatQ m(n + gens.size(), n);
    m.setZero();
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    for (size_t i = 0; i < gens.size(); ++i)
      m.row(n + i) = gens[i].transpose();
    Int d = 1;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (int j = 0; j < n; ++j) d = lcm_int(d, den(m(i, j)));
    MatZ scaled(m.rows(), n);
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (int j = 0; j < n; ++j) scaled(i, j) = num(m(i, j) * Rat(d));
    MatZ h = hermite_normal_form(std::move(scaled));
    MatQ basis(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) basis(i, j) = Rat(h(i, j)) / Rat(d);
    return std::make_shared<RootDatum>(type, Lattice(basis), p);
  }
  throw std::invalid_argument("bad isogeny spec '" + iso + "'");
}

}  // namespace centsplit
