#include "sympow/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "sympow/closedform.hpp"
#include "sympow/linalg.hpp"

namespace sympow {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string field_str(const Field& f) {
  return f.kind() == FieldKind::Rational
             ? std::string("rational")
             : "p:" + std::to_string(f.modulus());
}

// dim of the degree-t piece of the ideal generated by `gens`, by spanning
// g * (monomials of degree t - deg g).  Exact for any t; no basis needed.
int span_dim(const std::vector<Poly>& gens, const RingPtr& ring, int t) {
  std::vector<Monomial> basis = monomials_of_degree(*ring, t);
  SpanBuilder span(basis.size(), ring->field);
  for (const Poly& g : gens) {
    int d = t - g.degree();
    if (d < 0) continue;
    for (const Monomial& mono : monomials_of_degree(*ring, d))
      span.add(coordinates(g.times_monomial(mono, ring->field.one()), basis));
  }
  return static_cast<int>(span.rank());
}

SpanBuilder span_of_piece(const std::vector<Poly>& gens, const RingPtr& ring,
                          int t, const std::vector<Monomial>& basis) {
  SpanBuilder span(basis.size(), ring->field);
  for (const Poly& g : gens) {
    int d = t - g.degree();
    if (d < 0) continue;
    for (const Monomial& mono : monomials_of_degree(*ring, d))
      span.add(coordinates(g.times_monomial(mono, ring->field.one()), basis));
  }
  return span;
}

}  // namespace

std::string OracleReport::to_json() const {
  nlohmann::json j;
  j["query"] = query;
  j["result"] = result;
  if (value) j["value"] = *value;
  if (witness) j["witness"] = witness->str();
  j["detail"] = detail;
  j["field"] = field_desc;
  j["seed"] = seed;
  j["ms"] = millis;
  return j.dump(2);
}

long long estimate_containment_work(const FatPointScheme& z, int m, int r) {
  // crude upper-scale model: (# r-fold generator products) x (columns of the
  // truncated degree)^2; the generator count of I is near n for small n
  int n = z.n();
  long long g = n + 2;
  long long prods = 1;
  for (int i = 0; i < r; ++i) prods = prods * (g + i) / (i + 1);
  long long deg = static_cast<long long>(m) *
                  (static_cast<long long>(std::sqrt(2.0 * n)) + 2);
  long long cols = binom(deg + 2, 2);
  return prods * cols * cols;
}

OracleReport contains_bruteforce(const FatPointScheme& z, int m, int r,
                                 long long budget) {
  if (m < 1 || r < 1) throw std::invalid_argument("m, r >= 1 required");
  auto t0 = Clock::now();
  OracleReport rep;
  rep.query = "contains(n=" + std::to_string(z.n()) +
              ", m=" + std::to_string(m) + ", r=" + std::to_string(r) + ")";
  rep.field_desc = field_str(z.config.field());
  rep.seed = z.config.seed();

  long long est = estimate_containment_work(z, m, r);
  if (est > budget)
    throw std::runtime_error("work bound exceeded: estimated " +
                             std::to_string(est) + " > budget " +
                             std::to_string(budget));

  Ideal i1 = fat_ideal(z);
  Ideal isym = symbolic_power(z, m);
  Ideal ir = i1.power(r);
  RingPtr ring = i1.ring();

  std::vector<Poly> sym_gens = isym.generators();
  std::sort(sym_gens.begin(), sym_gens.end(),
            [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  int maxdeg = sym_gens.empty() ? 0 : sym_gens.back().degree();

  // graded membership degree by degree: I^r_t as a span of generator
  // multiples; valid because everything in sight is homogeneous
  rep.result = true;
  std::map<int, SpanBuilder> spans;
  for (const Poly& g : sym_gens) {
    int t = g.degree();
    auto it = spans.find(t);
    if (it == spans.end()) {
      std::vector<Monomial> basis = monomials_of_degree(*ring, t);
      it = spans.emplace(t, span_of_piece(ir.generators(), ring, t, basis)).first;
    }
    std::vector<Monomial> basis = monomials_of_degree(*ring, t);
    if (!it->second.contains(coordinates(g, basis))) {
      rep.result = false;
      rep.witness = g;
      break;
    }
  }
  rep.detail = "symbolic generators tested through degree " +
               std::to_string(maxdeg) + "; |I^r gens| = " +
               std::to_string(ir.generators().size());
  rep.millis = elapsed_ms(t0);
  return rep;
}

long alpha_bruteforce(const FatPointScheme& z, int m) {
  if (m < 1) throw std::invalid_argument("m >= 1 required");
  return alpha_scheme(z.scaled(m));
}

OracleReport check_conic_power_structure(const FatPointScheme& z, int m, int r,
                                     int t) {
  if (z.config.kind() != ConfigKind::OnConic || !z.is_uniform() ||
      z.multiplicities.front() != 1)
    throw std::invalid_argument("conic configuration of simple points required");
  int n = z.n();
  if (n < 5) throw std::invalid_argument("n >= 5 required");
  if (t < 2 * m * r) throw std::invalid_argument("t >= 2mr required");
  auto t0 = Clock::now();
  OracleReport rep;
  rep.query = "conic_structure(n=" + std::to_string(n) + ", m=" + std::to_string(m) +
              ", r=" + std::to_string(r) + ", t=" + std::to_string(t) + ")";
  rep.field_desc = field_str(z.config.field());

  int q = q_power(n, r, t, m).value();
  RingPtr ring = scheme_ring(z);
  std::vector<Monomial> basis = monomials_of_degree(*ring, t);

  // left: I(mZ)^r in degree t
  Ideal izm = fat_ideal(z.scaled(m));
  Ideal ir = izm.power(r);
  SpanBuilder left = span_of_piece(ir.generators(), ring, t, basis);

  // right: f^q I((rm - q)Z)_{t - 2q}
  Poly fq = conic_form(ring).pow(static_cast<unsigned>(q));
  GradedPiece piece = graded_piece(z.scaled(r * m - q), t - 2 * q);
  SpanBuilder right(basis.size(), ring->field);
  std::vector<std::vector<Scalar>> right_rows;
  for (const Poly& b : piece.basis) {
    right_rows.push_back(coordinates(fq * b, basis));
    right.add(right_rows.back());
  }

  bool dims = left.rank() == right.rank();
  bool rl = true, lr = true;
  for (const auto& row : right_rows)
    if (!left.contains(row)) rl = false;
  for (const auto& row : left.canonical_basis())
    if (!right.contains(row)) lr = false;

  rep.result = dims && rl && lr;
  rep.value = q;
  rep.detail = "q=" + std::to_string(q) + "; dim left=" +
               std::to_string(left.rank()) + ", dim right=" +
               std::to_string(right.rank()) + "; right<=left " +
               (rl ? "yes" : "NO") + ", left<=right " + (lr ? "yes" : "NO");
  rep.millis = elapsed_ms(t0);
  return rep;
}

OracleReport check_mult_map_surjectivity(const FatPointScheme& z1, int a,
                                         const FatPointScheme& z2, int b) {
  if (z1.n() != z2.n())
    throw std::invalid_argument("schemes live on different configurations");
  auto t0 = Clock::now();
  OracleReport rep;
  rep.query = "mult_map(a=" + std::to_string(a) + ", b=" + std::to_string(b) + ")";
  rep.field_desc = field_str(z1.config.field());

  GradedPiece p1 = graded_piece(z1, a);
  GradedPiece p2 = graded_piece(z2, b);
  if (p1.dim() == 0 || p2.dim() == 0) {
    rep.result = true;
    rep.detail = "vacuous: a factor has no sections";
    rep.millis = elapsed_ms(t0);
    return rep;
  }
  std::vector<int> mult = z1.multiplicities;
  for (int i = 0; i < z1.n(); ++i) mult[i] += z2.multiplicities[i];
  FatPointScheme sum(z1.config, std::move(mult));

  RingPtr ring = scheme_ring(z1);
  std::vector<Monomial> basis = monomials_of_degree(*ring, a + b);
  SpanBuilder span(basis.size(), ring->field);
  for (const Poly& u : p1.basis)
    for (const Poly& v : p2.basis) span.add(coordinates(u * v, basis));
  int target = graded_piece_dim(sum, a + b);

  rep.result = static_cast<int>(span.rank()) == target;
  rep.detail = "image rank " + std::to_string(span.rank()) + " of " +
               std::to_string(target);
  rep.millis = elapsed_ms(t0);
  return rep;
}

OracleReport check_cubic_family(int d, int m, std::uint64_t seed) {
  if (d < 3) throw std::invalid_argument("d >= 3 required");
  if (m < 1) throw std::invalid_argument("m >= 1 required");
  auto t0 = Clock::now();
  Field f = Field::prime(2147483647);
  PointConfig cfg = PointConfig::generic(2 * d, seed, f);
  std::vector<int> mult(2 * d, 1);
  mult[0] = d - 1;
  FatPointScheme z(cfg, mult);

  OracleReport rep;
  rep.query = "cubic_family(d=" + std::to_string(d) + ", m=" + std::to_string(m) + ")";
  rep.field_desc = field_str(f);
  rep.seed = seed;

  std::ostringstream detail;
  bool ok = true;

  int alpha = alpha_scheme(z);
  detail << "alpha=" << alpha;
  if (alpha != d) ok = false;

  Ideal iz = fat_ideal(z);
  std::vector<int> degs;
  for (const Poly& g : iz.generators()) degs.push_back(g.degree());
  std::sort(degs.begin(), degs.end());
  std::vector<int> want(2, d);
  want.insert(want.end(), d - 2, d + 1);
  detail << "; generator degrees {";
  for (std::size_t i = 0; i < degs.size(); ++i)
    detail << (i ? "," : "") << degs[i];
  detail << "}";
  if (degs != want) ok = false;

  int h0 = graded_piece_dim(z.scaled(m), m * d);
  detail << "; dim I(mZ)_{md}=" << h0;
  if (h0 != m + 1) ok = false;

  // graded equality I(Z)^m = I(mZ) through degree md + d; the containment
  // I^m <= I^(m) is automatic, so matching dimensions give equality
  Ideal power = iz.power(m);
  RingPtr ring = iz.ring();
  for (int t = alpha * m; t <= m * d + d; ++t) {
    int lhs = span_dim(power.generators(), ring, t);
    int rhs = graded_piece_dim(z.scaled(m), t);
    if (lhs != rhs) {
      ok = false;
      detail << "; degree " << t << ": " << lhs << " != " << rhs;
      break;
    }
  }
  detail << "; graded equality through " << m * d + d;

  rep.result = ok;
  rep.value = alpha;
  rep.detail = detail.str();
  rep.millis = elapsed_ms(t0);
  return rep;
}

OracleReport check_power_truncation(int n, int r, std::uint64_t seed) {
  if (n < 1 || r < 1) throw std::invalid_argument("n, r >= 1 required");
  auto t0 = Clock::now();
  Field f = Field::prime(2147483647);
  PointConfig cfg = PointConfig::generic(n, seed, f);
  FatPointScheme z = FatPointScheme::uniform(cfg, 1);

  int alpha = alpha_scheme(z);
  int reg = reg_scheme(z);
  if (alpha != reg)
    throw std::domain_error("hypothesis alpha = reg fails: alpha=" +
                            std::to_string(alpha) + ", reg=" +
                            std::to_string(reg));

  OracleReport rep;
  rep.query = "power_truncation(n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")";
  rep.field_desc = field_str(f);
  rep.seed = seed;

  Ideal iz = fat_ideal(z);
  Ideal power = iz.power(r);
  Ideal rhs = symbolic_power(z, r).truncate(r * alpha);
  RingPtr ring = iz.ring();

  bool ok = true;
  int bound = r * alpha + reg + 1;
  std::ostringstream detail;
  detail << "alpha=reg=" << alpha << "; compared through degree " << bound;
  for (int t = 0; t <= bound; ++t) {
    int a = span_dim(power.generators(), ring, t);
    int b = span_dim(rhs.generators(), ring, t);
    if (a != b) {
      ok = false;
      detail << "; degree " << t << ": " << a << " != " << b;
      break;
    }
  }
  rep.result = ok;
  rep.value = alpha;
  rep.detail = detail.str();
  rep.millis = elapsed_ms(t0);
  return rep;
}

std::string CrossTable::to_csv() const {
  std::ostringstream out;
  out << "m,r,predicted,oracle,agree\n";
  for (const CrossRow& row : rows)
    out << row.m << "," << row.r << "," << row.predicted << "," << row.oracle
        << "," << (row.agree ? 1 : 0) << "\n";
  return out.str();
}

std::string CrossTable::to_json() const {
  nlohmann::json j;
  j["kind"] = kind;
  j["n"] = n;
  j["all_agree"] = all_agree;
  j["rows"] = nlohmann::json::array();
  for (const CrossRow& row : rows)
    j["rows"].push_back({{"m", row.m},
                         {"r", row.r},
                         {"predicted", row.predicted},
                         {"oracle", row.oracle},
                         {"agree", row.agree}});
  return j.dump(2);
}

CrossTable crossvalidate(const FatPointScheme& z, bool conic_kind, int m_max,
                         int r_max, long long budget) {
  CrossTable table;
  table.kind = conic_kind ? "conic" : "general";
  table.n = z.n();
  for (int m = 1; m <= m_max; ++m)
    for (int r = 1; r <= r_max; ++r) {
      Verdict v = conic_kind ? contains_conic(z.n(), m, r)
                             : contains_general(z.n(), m, r);
      CrossRow row;
      row.m = m;
      row.r = r;
      row.predicted = v.contains == Tri::True    ? 1
                      : v.contains == Tri::False ? 0
                                                 : -1;
      row.oracle = contains_bruteforce(z, m, r, budget).result ? 1 : 0;
      row.agree = row.predicted == -1 || row.predicted == row.oracle;
      if (!row.agree) table.all_agree = false;
      table.rows.push_back(row);
    }
  return table;
}

}  // namespace sympow
