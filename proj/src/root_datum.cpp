#include "qch/root_datum.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qch {

Weight operator+(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Weight operator-(const Weight& a, const Weight& b) {
  Weight r = a;
  for (size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

Weight operator*(Coord c, const Weight& a) {
  Weight r = a;
  for (auto& x : r.coords) x *= c;
  return r;
}

bool is_dominant(const Weight& a) {
  return std::all_of(a.coords.begin(), a.coords.end(), [](Coord c) { return c >= 0; });
}

std::string weight_str(const Weight& a) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < a.coords.size(); ++i) {
    if (i) os << ",";
    os << a.coords[i];
  }
  os << ")";
  return os.str();
}

namespace {

IntMatrix cartan_matrix_for(const std::string& label, int& rank_out,
                            std::vector<Coord>& symm_out) {
  if (label.size() < 2) throw std::invalid_argument("unknown type label: " + label);
  char family = label[0];
  int n = 0;
  for (size_t k = 1; k < label.size(); ++k) {
    if (label[k] < '0' || label[k] > '9')
      throw std::invalid_argument("unknown type label: " + label);
    n = n * 10 + (label[k] - '0');
  }
  if (n < 1 || n > 8) throw std::invalid_argument("rank out of range in label: " + label);

  IntMatrix a(n, std::vector<Coord>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edge(i, i + 1);
  };
  std::vector<Coord> d(n, 1);

  switch (family) {
    case 'A':
      chain(n);
      break;
    case 'B':
      if (n < 2) throw std::invalid_argument("B requires rank >= 2");
      chain(n);
      a[n - 1][n - 2] = -2;  // short alpha_n: its coroot pairs to -2 with alpha_{n-1}
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case 'C':
      if (n < 2) throw std::invalid_argument("C requires rank >= 2");
      chain(n);
      a[n - 2][n - 1] = -2;  // long alpha_n
      d[n - 1] = 2;
      break;
    case 'D':
      if (n < 3) throw std::invalid_argument("D requires rank >= 3");
      chain(n - 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw std::invalid_argument("E requires rank 6, 7 or 8");
      // Bourbaki numbering: chain 1-3-4-5-...-n with node 2 attached to 4.
      edge(0, 2);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      edge(1, 3);
      break;
    case 'F':
      if (n != 4) throw std::invalid_argument("F requires rank 4");
      chain(4);
      a[2][1] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      d[0] = d[1] = 2;
      break;
    case 'G':
      if (n != 2) throw std::invalid_argument("G requires rank 2");
      a[0][1] = -3;
      a[1][0] = -1;
      d[1] = 3;
      break;
    default:
      throw std::invalid_argument("unknown type label: " + label);
  }
  rank_out = n;
  symm_out = std::move(d);
  return a;
}

Int det_recursive(const std::vector<std::vector<Int>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  Int acc = 0;
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Int>> sub(n - 1, std::vector<Int>(n - 1));
    for (size_t r = 1; r < n; ++r) {
      size_t cc = 0;
      for (size_t c = 0; c < n; ++c)
        if (c != j) sub[r - 1][cc++] = m[r][c];
    }
    Int term = m[0][j] * det_recursive(sub);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

RootDatum build_root_datum(const std::string& label) {
  RootDatum datum;
  int n = 0;
  std::vector<Coord> d;
  IntMatrix a = cartan_matrix_for(label, n, d);
  datum.cartan = CartanDatum{label, n, a, d};

  for (int i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw std::logic_error("cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && a[i][j] > 0) throw std::logic_error("cartan off-diagonal must be <= 0");
      if (d[i] * a[i][j] != d[j] * a[j][i]) throw std::logic_error("symmetrizer mismatch");
    }
  }

  // Simple roots are the Cartan-matrix columns in fundamental coordinates.
  for (int j = 0; j < n; ++j) {
    Weight alpha;
    alpha.coords.resize(n);
    for (int i = 0; i < n; ++i) alpha.coords[i] = a[i][j];
    datum.simple_roots.push_back(std::move(alpha));
  }
  datum.rho.coords.assign(n, 1);

  // Generate positive roots by reflection closure in simple-root coordinates:
  // s_i fixes every coordinate except the i-th, which becomes
  // c_i - sum_j c_j a[i][j].  A root is positive iff all coordinates are >= 0.
  std::set<std::vector<Coord>> roots;
  std::vector<std::vector<Coord>> work;
  for (int j = 0; j < n; ++j) {
    std::vector<Coord> e(n, 0);
    e[j] = 1;
    roots.insert(e);
    work.push_back(e);
  }
  while (!work.empty()) {
    std::vector<Coord> c = std::move(work.back());
    work.pop_back();
    for (int i = 0; i < n; ++i) {
      Coord pair = 0;
      for (int j = 0; j < n; ++j) pair += c[j] * a[i][j];
      std::vector<Coord> r = c;
      r[i] -= pair;
      if (std::all_of(r.begin(), r.end(), [](Coord x) { return x >= 0; }) &&
          roots.insert(r).second)
        work.push_back(r);
    }
  }

  for (const auto& c : roots) {
    Weight w;
    w.coords.assign(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) w.coords[i] += c[j] * a[i][j];
    datum.positive_roots.push_back(std::move(w));
  }

  // Adjugate and determinant of the Cartan matrix, for exact heights.
  std::vector<std::vector<Int>> ai(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) ai[i][j] = static_cast<long>(a[i][j]);
  datum.det = det_recursive(ai);
  if (datum.det <= 0) throw std::logic_error("cartan matrix not of finite type");
  datum.adjugate.assign(n, std::vector<Int>(n, Int(0)));
  if (n == 1) {
    datum.adjugate[0][0] = 1;
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
        int rr = 0;
        for (int r = 0; r < n; ++r) {
          if (r == j) continue;
          int cc = 0;
          for (int c = 0; c < n; ++c)
            if (c != i) minor[rr][cc++] = ai[r][c];
          ++rr;
        }
        Int cof = det_recursive(minor);
        datum.adjugate[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
      }
  }
  datum.height_vec.assign(n, Int(0));
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) datum.height_vec[k] += datum.adjugate[j][k];

  std::sort(datum.positive_roots.begin(), datum.positive_roots.end(),
            [&](const Weight& x, const Weight& y) {
              Int hx = scaled_height(datum, x), hy = scaled_height(datum, y);
              return std::tie(hx, x.coords) < std::tie(hy, y.coords);
            });
  return datum;
}

Coord pairing(const RootDatum& datum, int coroot_index, const Weight& lam) {
  if (coroot_index < 1 || coroot_index > datum.cartan.rank)
    throw std::out_of_range("pairing: coroot index out of range");
  if (static_cast<int>(lam.coords.size()) != datum.cartan.rank)
    throw std::out_of_range("pairing: weight has wrong rank");
  return lam.coords[coroot_index - 1];
}

std::optional<std::vector<Coord>> root_coords(const RootDatum& datum, const Weight& lam) {
  int n = datum.cartan.rank;
  std::vector<Coord> out(n);
  for (int j = 0; j < n; ++j) {
    Int num = 0;
    for (int k = 0; k < n; ++k) num += datum.adjugate[j][k] * static_cast<long>(lam.coords[k]);
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), datum.det.get_mpz_t());
    if (r != 0) return std::nullopt;
    out[j] = static_cast<Coord>(q.get_si());
  }
  return out;
}

Coord height(const RootDatum& datum, const Weight& lam, const std::set<int>& J) {
  for (int i : J)
    if (i < 1 || i > datum.cartan.rank) throw std::out_of_range("height: bad index in J");
  auto rc = root_coords(datum, lam);
  if (!rc) throw std::domain_error("height: weight not in the root lattice");
  Coord h = 0;
  for (int j = 1; j <= datum.cartan.rank; ++j)
    if (!J.count(j)) h += (*rc)[j - 1];
  return h;
}

Int scaled_height(const RootDatum& datum, const Weight& lam) {
  Int s = 0;
  for (int k = 0; k < datum.cartan.rank; ++k)
    s += datum.height_vec[k] * static_cast<long>(lam.coords[k]);
  return s;
}

Coord parabolic_nilradical_dim(const RootDatum& datum, const std::set<int>& J) {
  for (int i : J)
    if (i < 1 || i > datum.cartan.rank)
      throw std::out_of_range("parabolic_nilradical_dim: bad index in J");
  Coord outside = 0;
  for (const Weight& beta : datum.positive_roots) {
    auto rc = root_coords(datum, beta);
    bool supported_on_J = true;
    for (int j = 1; j <= datum.cartan.rank; ++j)
      if ((*rc)[j - 1] != 0 && !J.count(j)) supported_on_J = false;
    if (!supported_on_J) ++outside;
  }
  return outside;
}

IntMatrix simple_reflection_matrix(const RootDatum& datum, int i) {
  int n = datum.cartan.rank;
  if (i < 1 || i > n) throw std::out_of_range("simple_reflection_matrix: index out of range");
  // s_i(lam) = lam - lam_i * alpha_i, so column i of the identity is replaced
  // by e_i - alpha_i.
  IntMatrix m = identity_matrix(n);
  for (int k = 0; k < n; ++k) m[k][i - 1] -= datum.cartan.cartan[k][i - 1];
  return m;
}

Weight apply_matrix(const IntMatrix& m, const Weight& lam) {
  int n = static_cast<int>(m.size());
  Weight r;
  r.coords.assign(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.coords[i] += m[i][j] * lam.coords[j];
  return r;
}

IntMatrix matrix_product(const IntMatrix& a, const IntMatrix& b) {
  int n = static_cast<int>(a.size());
  IntMatrix r(n, std::vector<Coord>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<Coord>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace qch
