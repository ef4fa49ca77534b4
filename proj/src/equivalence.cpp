#include "maxdet/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "maxdet/errors.hpp"

namespace maxdet {

BalanceStats balance_vector_stats(const std::vector<int>& exps) {
  BalanceStats s;
  for (int e : exps) {
    switch (((e % 3) + 3) % 3) {
      case 0: ++s.v1; break;
      case 1: ++s.v_w; break;
      default: ++s.v_w2; break;
    }
  }
  return s;
}

namespace {

void need_mu3(const LogMatrix& m, const char* who) {
  if (m.ell() != 3) throw UsageError(std::string(who) + ": balancing is defined over mu_3 only");
}

std::vector<int> row_of(const LogMatrix& m, int i) {
  std::vector<int> r(m.n());
  for (int j = 0; j < m.n(); ++j) r[j] = m(i, j);
  return r;
}

std::vector<int> col_of(const LogMatrix& m, int j) {
  std::vector<int> c(m.n());
  for (int i = 0; i < m.n(); ++i) c[i] = m(i, j);
  return c;
}

// The unique shift s with omega^s v balanced.
int balancing_shift(std::vector<int> v) {
  int found = -1;
  for (int s = 0; s < 3; ++s) {
    std::vector<int> w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = v[i] + s;
    if (balance_vector_stats(w).balanced()) {
      if (found >= 0) throw InternalError("balancing shift is not unique");
      found = s;
    }
  }
  if (found < 0) throw InternalError("no balancing shift");
  return found;
}

}  // namespace

bool is_balanced(const LogMatrix& m) {
  need_mu3(m, "is_balanced");
  for (int i = 0; i < m.n(); ++i)
    if (!balance_vector_stats(row_of(m, i)).balanced() || !balance_vector_stats(col_of(m, i)).balanced())
      return false;
  return true;
}

Balanced balance_matrix(const LogMatrix& m) {
  need_mu3(m, "balance_matrix");
  int n = m.n();
  if (n % 3 == 0) throw UsageError("balance_matrix: n = 0 (mod 3), the balancing pair is not unique");
  Balanced b{m, std::vector<int>(n), std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    b.d1[i] = balancing_shift(row_of(m, i));
    for (int j = 0; j < n; ++j) b.matrix.set(i, j, m(i, j) + b.d1[i]);
  }
  LogMatrix rows = b.matrix;
  for (int j = 0; j < n; ++j) {
    b.d2[j] = balancing_shift(col_of(rows, j));
    for (int i = 0; i < n; ++i) b.matrix.set(i, j, rows(i, j) + b.d2[j]);
  }
  if (!is_balanced(b.matrix)) throw InternalError("balance_matrix: rows unbalanced after column step");
  return b;
}

bool standard_form_check(const GramMatrix& g) {
  if (!g.is_hermitian()) throw UsageError("standard_form_check: matrix is not Hermitian");
  int n = g.n();
  // 1-based accessors for |M_jk|^2
  auto a = [&](int j, int k) { return g(j - 1, k - 1).norm_squared(); };
  for (int i = 1; 2 * i <= n; ++i) {
    BigInt lead = a(2 * i - 1, 2 * i);
    for (int j = 2 * i - 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        if (lead < a(j, k)) return false;
  }
  for (int i = 2; i + 1 <= n; i += 2) {
    BigInt lead = a(i, i + 1);
    if (i + 2 <= n && lead < a(i, i + 2)) return false;
    if (i + 1 <= n && lead < a(i - 1, i + 1)) return false;
    if (i + 2 <= n && lead < a(i - 1, i + 2)) return false;
  }
  return true;
}

namespace {

ColoredGraph cell_graph(int k, int f, const std::function<int(int, int)>& value_index) {
  ColoredGraph g;
  g.n = 2 * k + f + k * k;
  g.color.resize(g.n);
  for (int i = 0; i < k; ++i) {
    g.color[i] = 0;
    g.color[k + i] = 1;
  }
  for (int r = 0; r < f; ++r) g.color[2 * k + r] = 3 + r;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int cell = 2 * k + f + i * k + j;
      g.color[cell] = 2;
      g.edges.emplace_back(i, cell);
      g.edges.emplace_back(k + j, cell);
      int v = value_index(i, j);
      if (v >= 0) g.edges.emplace_back(2 * k + v, cell);
    }
  return g;
}

}  // namespace

ColoredGraph gram_to_graph(const GramMatrix& g, const std::vector<CycInt>& alphabet) {
  int k = g.n();
  std::map<std::pair<BigInt, BigInt>, int> index;
  for (size_t r = 0; r < alphabet.size(); ++r) index.emplace(std::make_pair(alphabet[r].a(), alphabet[r].b()), static_cast<int>(r));
  auto lookup = [&](int i, int j) {
    const CycInt& x = g(i, j);
    auto it = index.find({x.a(), x.b()});
    if (it != index.end()) return it->second;
    if (i == j) return -1;  // the diagonal may stay outside the alphabet
    throw UsageError("gram_to_graph: entry " + x.to_string() + " not in the value alphabet");
  };
  return cell_graph(k, static_cast<int>(alphabet.size()), lookup);
}

ColoredGraph index_graph(int k, int f, const std::vector<int>& idx) {
  if (idx.size() != static_cast<size_t>(k) * k) throw UsageError("index_graph: need k*k indices");
  return cell_graph(k, f, [&](int i, int j) {
    int v = idx[static_cast<size_t>(i) * k + j];
    if (v >= f || (v < 0 && i != j)) throw UsageError("index_graph: value index out of range");
    return v;
  });
}

ColoredGraph matrix_to_graph(const LogMatrix& m) {
  return cell_graph(m.n(), m.ell(), [&](int i, int j) { return m(i, j); });
}

std::string Certificate::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

namespace {

// Ordered partition refinement and individualization search.
class Canon {
 public:
  explicit Canon(const ColoredGraph& g) : g_(g), n_(g.n), adj_(g.n) {
    for (auto [u, v] : g.edges) {
      if (u < 0 || v < 0 || u >= n_ || v >= n_) throw UsageError("canonical_certificate: edge out of range");
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    cnt_.assign(n_, 0);
  }

  std::vector<int> run() {
    Part p;
    p.lab.resize(n_);
    std::iota(p.lab.begin(), p.lab.end(), 0);
    std::stable_sort(p.lab.begin(), p.lab.end(), [&](int a, int b) { return g_.color[a] < g_.color[b]; });
    p.pos.resize(n_);
    p.cell.resize(n_);
    p.cend.assign(n_ + 1, 0);
    std::set<int> queue;
    for (int i = 0; i < n_; ++i) {
      p.pos[p.lab[i]] = i;
      if (i == 0 || g_.color[p.lab[i]] != g_.color[p.lab[i - 1]]) {
        queue.insert(i);
        p.cell[i] = i;
      } else {
        p.cell[i] = p.cell[i - 1];
      }
      p.cend[p.cell[i]] = i + 1;
    }
    if (n_ == 0) return {};
    refine(p, queue);
    search(p, 0);
    return best_lab_;
  }

  std::vector<int> code_of(const std::vector<int>& lab) const {
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
    std::vector<int> code;
    code.reserve(g_.edges.size());
    for (auto [u, v] : g_.edges) {
      int a = pos[u], b = pos[v];
      if (a > b) std::swap(a, b);
      code.push_back(a * n_ + b);
    }
    std::sort(code.begin(), code.end());
    return code;
  }

 private:
  struct Part {
    std::vector<int> lab, pos, cell, cend;
  };

  void refine(Part& p, std::set<int>& queue) {
    while (!queue.empty()) {
      int s = *queue.begin();
      queue.erase(queue.begin());
      std::vector<int> touched;
      for (int q = s; q < p.cend[s]; ++q)
        for (int u : adj_[p.lab[q]]) {
          if (cnt_[u]++ == 0) touched.push_back(u);
        }
      std::set<int> cells;
      for (int u : touched) {
        int c = p.cell[p.pos[u]];
        if (p.cend[c] - c > 1) cells.insert(c);
      }
      for (int c : cells) {
        int e = p.cend[c];
        std::sort(p.lab.begin() + c, p.lab.begin() + e, [&](int a, int b) { return cnt_[a] < cnt_[b]; });
        for (int q = c; q < e; ++q) p.pos[p.lab[q]] = q;
        if (cnt_[p.lab[c]] == cnt_[p.lab[e - 1]]) continue;
        int start = c;
        for (int q = c; q < e; ++q) {
          if (q > c && cnt_[p.lab[q]] != cnt_[p.lab[q - 1]]) {
            p.cend[start] = q;
            queue.insert(start);
            start = q;
          }
          p.cell[q] = start;
        }
        p.cend[start] = e;
        queue.insert(start);
      }
      for (int u : touched) cnt_[u] = 0;
    }
  }

  // Union-find orbits of the found automorphisms that fix `fixed` pointwise.
  std::vector<int> orbits(const std::vector<int>& fixed) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : autos_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return gamma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void add_auto(const std::vector<int>& from, const std::vector<int>& to) {
    if (autos_.size() >= 256) return;
    std::vector<int> gamma(n_);
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    autos_.push_back(std::move(gamma));
  }

  // Returns the depth to unwind to (or a value > depth to continue normally).
  int search(Part& p, int depth) {
    int target = -1;
    for (int i = 0; i < n_; i = p.cend[i])
      if (p.cend[i] - i > 1) {
        target = i;
        break;
      }
    if (target < 0) return leaf(p, depth);

    std::vector<int> members(p.lab.begin() + target, p.lab.begin() + p.cend[target]);
    std::sort(members.begin(), members.end());
    std::vector<int> done;
    for (int v : members) {
      if (!done.empty()) {
        auto orb = orbits(path_);
        if (std::any_of(done.begin(), done.end(), [&](int w) { return orb[w] == orb[v]; })) continue;
      }
      Part child = p;
      individualize(child, target, v);
      path_.push_back(v);
      if (first_path_ && depth >= static_cast<int>(first_prefix_.size())) first_prefix_.push_back(v);
      int back = search(child, depth + 1);
      path_.pop_back();
      done.push_back(v);
      if (back < depth) return back;
      first_path_ = false;
    }
    return depth + 1;
  }

  void individualize(Part& p, int s, int v) {
    int q = p.pos[v];
    std::swap(p.lab[s], p.lab[q]);
    p.pos[p.lab[s]] = s;
    p.pos[p.lab[q]] = q;
    int e = p.cend[s];
    p.cend[s] = s + 1;
    for (int i = s + 1; i < e; ++i) p.cell[i] = s + 1;
    p.cend[s + 1] = e;
    std::set<int> queue{s};
    refine(p, queue);
  }

  int leaf(const Part& p, int depth) {
    std::vector<int> code = code_of(p.lab);
    if (first_lab_.empty()) {
      first_lab_ = p.lab;
      first_code_ = code;
      best_lab_ = p.lab;
      best_code_ = std::move(code);
      return depth + 1;
    }
    if (code == first_code_) {
      add_auto(first_lab_, p.lab);
      // unwind to where this path left the first path
      int d = 0;
      while (d < static_cast<int>(path_.size()) && d < static_cast<int>(first_prefix_.size()) &&
             path_[d] == first_prefix_[d])
        ++d;
      return d;
    }
    if (code == best_code_) {
      add_auto(best_lab_, p.lab);
      return depth + 1;
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_lab_ = p.lab;
    }
    return depth + 1;
  }

  const ColoredGraph& g_;
  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> cnt_;
  std::vector<std::vector<int>> autos_;
  std::vector<int> path_, first_prefix_;
  bool first_path_ = true;
  std::vector<int> first_lab_, first_code_, best_lab_, best_code_;
};

void put_u32(std::string& out, uint32_t x) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<char>((x >> s) & 0xff));
}

}  // namespace

std::vector<int> canonical_labeling(const ColoredGraph& g) {
  if (static_cast<int>(g.color.size()) != g.n) throw UsageError("canonical_labeling: color vector size mismatch");
  Canon c(g);
  return c.run();
}

Certificate canonical_certificate(const ColoredGraph& g) {
  if (static_cast<int>(g.color.size()) != g.n) throw UsageError("canonical_certificate: color vector size mismatch");
  Canon c(g);
  std::vector<int> lab = c.run();
  Certificate cert;
  put_u32(cert.bytes, static_cast<uint32_t>(g.n));
  for (int v : lab) put_u32(cert.bytes, static_cast<uint32_t>(g.color[v]));
  std::vector<int> code = c.code_of(lab);
  put_u32(cert.bytes, static_cast<uint32_t>(code.size()));
  for (int x : code) put_u32(cert.bytes, static_cast<uint32_t>(x));
  return cert;
}

bool permutation_equivalent(const LogMatrix& x1, const LogMatrix& x2) {
  need_mu3(x1, "permutation_equivalent");
  need_mu3(x2, "permutation_equivalent");
  if (x1.n() != x2.n()) throw UsageError("permutation_equivalent: orders differ");
  if (!is_balanced(x1) || !is_balanced(x2)) throw UsageError("permutation_equivalent: inputs must be balanced");
  return canonical_certificate(matrix_to_graph(x1)) == canonical_certificate(matrix_to_graph(x2));
}

}  // namespace maxdet
