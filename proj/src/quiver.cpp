#include "mdeg/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace mdeg {

char type_letter(DynkinType t) {
  switch (t) {
    case DynkinType::A: return 'A';
    case DynkinType::D: return 'D';
    case DynkinType::E: return 'E';
  }
  return '?';
}

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.p) + ")";
}

K0Class& K0Class::operator+=(const K0Class& o) {
  if (coords.size() < o.coords.size()) coords.resize(o.coords.size(), 0);
  for (std::size_t k = 0; k < o.coords.size(); ++k) coords[k] += o.coords[k];
  return *this;
}

K0Class& K0Class::operator-=(const K0Class& o) {
  if (coords.size() < o.coords.size()) coords.resize(o.coords.size(), 0);
  for (std::size_t k = 0; k < o.coords.size(); ++k) coords[k] -= o.coords[k];
  return *this;
}

bool K0Class::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}

bool K0Class::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c >= 0; });
}

namespace {

void check_rank(DynkinType type, int rank) {
  switch (type) {
    case DynkinType::A:
      if (rank < 1) throw InputError("rank: type A needs rank >= 1");
      break;
    case DynkinType::D:
      if (rank < 4) throw InputError("rank: type D needs rank >= 4");
      break;
    case DynkinType::E:
      if (rank < 6 || rank > 8) throw InputError("rank: type E needs rank 6, 7 or 8");
      break;
  }
}

std::vector<std::vector<int>> undirected_adjacency(int rank,
                                                   const std::vector<std::pair<int, int>>& arrows) {
  if (static_cast<int>(arrows.size()) != rank - 1) {
    throw InputError("arrows: a Dynkin diagram of rank " + std::to_string(rank) + " has exactly " +
                     std::to_string(rank - 1) + " edges, got " + std::to_string(arrows.size()));
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(rank) + 1);
  std::set<std::pair<int, int>> seen;
  for (auto [s, t] : arrows) {
    if (s < 1 || s > rank || t < 1 || t > rank) {
      throw InputError("arrows: endpoint out of range in [" + std::to_string(s) + "," +
                       std::to_string(t) + "]");
    }
    if (s == t) throw InputError("arrows: loop at vertex " + std::to_string(s));
    auto key = std::minmax(s, t);
    if (!seen.insert(key).second) {
      throw InputError("arrows: edge {" + std::to_string(key.first) + "," +
                       std::to_string(key.second) + "} oriented more than once");
    }
    adj[static_cast<std::size_t>(s)].push_back(t);
    adj[static_cast<std::size_t>(t)].push_back(s);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  // n-1 distinct edges and connected means tree.
  std::vector<bool> reached(static_cast<std::size_t>(rank) + 1, false);
  std::queue<int> todo;
  todo.push(1);
  reached[1] = true;
  int count = 1;
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (!reached[static_cast<std::size_t>(w)]) {
        reached[static_cast<std::size_t>(w)] = true;
        ++count;
        todo.push(w);
      }
    }
  }
  if (count != rank) throw InputError("arrows: diagram is disconnected (not a tree)");
  return adj;
}

int arm_length(const std::vector<std::vector<int>>& adj, int branch, int first) {
  int len = 1;
  int prev = branch;
  int cur = first;
  while (adj[static_cast<std::size_t>(cur)].size() == 2) {
    int next = adj[static_cast<std::size_t>(cur)][0] == prev ? adj[static_cast<std::size_t>(cur)][1]
                                                             : adj[static_cast<std::size_t>(cur)][0];
    prev = cur;
    cur = next;
    ++len;
  }
  return len;
}

void check_shape(DynkinType type, int rank, const std::vector<std::vector<int>>& adj) {
  if (type == DynkinType::A) {
    // The type-A calculus works in the linear labelling 1 - 2 - ... - n.
    for (int i = 1; i < rank; ++i) {
      const auto& row = adj[static_cast<std::size_t>(i)];
      if (std::find(row.begin(), row.end(), i + 1) == row.end()) {
        throw InputError("arrows: type A requires the linear labelling, missing edge {" +
                         std::to_string(i) + "," + std::to_string(i + 1) + "}");
      }
    }
    return;
  }
  int branch = 0;
  for (int i = 1; i <= rank; ++i) {
    auto deg = adj[static_cast<std::size_t>(i)].size();
    if (deg > 3) throw InputError("arrows: vertex " + std::to_string(i) + " has degree > 3");
    if (deg == 3) {
      if (branch != 0) throw InputError("arrows: more than one branch vertex");
      branch = i;
    }
  }
  if (branch == 0) throw InputError("arrows: type D/E diagram needs a branch vertex");
  std::vector<int> arms;
  for (int w : adj[static_cast<std::size_t>(branch)]) arms.push_back(arm_length(adj, branch, w));
  std::sort(arms.begin(), arms.end());
  std::vector<int> expected;
  if (type == DynkinType::D) {
    expected = {1, 1, rank - 3};
  } else {
    expected = {1, 2, rank - 4};
  }
  std::sort(expected.begin(), expected.end());
  if (arms != expected) {
    throw InputError(std::string("arrows: tree shape is not ") + type_letter(type) +
                     std::to_string(rank));
  }
}

}  // namespace

std::map<int, int> synthesize_height(DynkinType type, int rank,
                                     const std::vector<std::pair<int, int>>& arrows, int root,
                                     int root_value) {
  check_rank(type, rank);
  auto adj = undirected_adjacency(rank, arrows);
  if (root < 1 || root > rank) throw InputError("height_root: not a diagram vertex");
  std::set<std::pair<int, int>> directed(arrows.begin(), arrows.end());
  std::map<int, int> h;
  h[root] = root_value;
  std::queue<int> todo;
  todo.push(root);
  while (!todo.empty()) {
    int u = todo.front();
    todo.pop();
    for (int w : adj[static_cast<std::size_t>(u)]) {
      if (h.count(w)) continue;
      // u -> w lowers the height by one; w -> u raises it.
      h[w] = directed.count({u, w}) ? h[u] - 1 : h[u] + 1;
      todo.push(w);
    }
  }
  return h;
}

Quiver Quiver::build(const QuiverSpec& spec) {
  check_rank(spec.type, spec.rank);
  Quiver q;
  q.type_ = spec.type;
  q.rank_ = spec.rank;
  q.arrows_ = spec.arrows;
  q.adjacency_ = undirected_adjacency(spec.rank, spec.arrows);
  check_shape(spec.type, spec.rank, q.adjacency_);

  std::map<int, int> h;
  if (spec.height) {
    h = *spec.height;
    for (auto& [k, val] : h) {
      (void)val;
      if (k < 1 || k > spec.rank) {
        throw InputError("height: key " + std::to_string(k) + " is not a diagram vertex");
      }
    }
    for (int i = 1; i <= spec.rank; ++i) {
      if (!h.count(i)) throw InputError("height: missing value for vertex " + std::to_string(i));
    }
  } else {
    h = synthesize_height(spec.type, spec.rank, spec.arrows, spec.height_root.value_or(1),
                          spec.height_root_value);
  }
  for (auto [s, t] : spec.arrows) {
    if (h[s] - h[t] != 1) {
      throw InputError("height: arrow " + std::to_string(s) + "->" + std::to_string(t) +
                       " needs height(" + std::to_string(s) + ") - height(" + std::to_string(t) +
                       ") = 1");
    }
  }
  q.height_.assign(static_cast<std::size_t>(spec.rank) + 1, 0);
  for (int i = 1; i <= spec.rank; ++i) q.height_[static_cast<std::size_t>(i)] = h[i];

  // Injective I_i: j contributes 1 when a directed path j -> i exists (trees have at most one).
  std::vector<std::vector<int>> incoming(static_cast<std::size_t>(spec.rank) + 1);
  for (auto [s, t] : spec.arrows) incoming[static_cast<std::size_t>(t)].push_back(s);
  q.injectives_.assign(static_cast<std::size_t>(spec.rank) + 1, K0Class(spec.rank));
  for (int i = 1; i <= spec.rank; ++i) {
    auto& cls = q.injectives_[static_cast<std::size_t>(i)];
    std::vector<int> stack{i};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      cls.coords[static_cast<std::size_t>(u - 1)] += 1;
      for (int s : incoming[static_cast<std::size_t>(u)]) stack.push_back(s);
    }
  }
  return q;
}

std::string Quiver::name() const { return type_letter(type_) + std::to_string(rank_); }

const std::vector<int>& Quiver::neighbors(int i) const {
  if (!is_diagram_vertex(i)) throw InputError("vertex " + std::to_string(i) + " out of range");
  return adjacency_[static_cast<std::size_t>(i)];
}

bool Quiver::adjacent(int i, int j) const {
  if (!is_diagram_vertex(i)) return false;
  const auto& row = adjacency_[static_cast<std::size_t>(i)];
  return std::binary_search(row.begin(), row.end(), j);
}

int Quiver::height(int i) const {
  if (!is_diagram_vertex(i)) throw InputError("vertex " + std::to_string(i) + " out of range");
  return height_[static_cast<std::size_t>(i)];
}

bool Quiver::is_sentinel(const Vertex& v) const {
  return type_ == DynkinType::A && (v.i == 0 || v.i == rank_ + 1);
}

bool Quiver::in_hat_i(const Vertex& v) const {
  if (!is_diagram_vertex(v.i)) return false;
  return (v.p - height(v.i)) % 2 == 0;
}

bool Quiver::in_hat_i_prime(const Vertex& v) const {
  if (!is_diagram_vertex(v.i)) return false;
  return (v.p - height(v.i)) % 2 != 0;
}

void Quiver::require_hat_i(const Vertex& v, const std::string& what) const {
  if (!in_hat_i(v)) {
    throw InputError(what + ": " + to_string(v) + " is not a vertex of the repetition quiver of " +
                     name());
  }
}

int Quiver::coxeter_number() const {
  switch (type_) {
    case DynkinType::A: return rank_ + 1;
    case DynkinType::D: return 2 * rank_ - 2;
    case DynkinType::E: return rank_ == 6 ? 12 : (rank_ == 7 ? 18 : 30);
  }
  return 0;
}

const K0Class& Quiver::injective_dim(int i) const {
  if (!is_diagram_vertex(i)) throw InputError("vertex " + std::to_string(i) + " out of range");
  return injectives_[static_cast<std::size_t>(i)];
}

std::vector<Vertex> Quiver::hat_i_window(int p_lo, int p_hi) const {
  std::vector<Vertex> out;
  for (int p = p_lo; p <= p_hi; ++p) {
    for (int i = 1; i <= rank_; ++i) {
      if (in_hat_i({i, p})) out.push_back({i, p});
    }
  }
  return out;
}

std::vector<Vertex> mesh_predecessors(const Quiver& q, const Vertex& x) {
  std::vector<Vertex> out;
  if (!q.is_diagram_vertex(x.i)) return out;
  for (int j : q.neighbors(x.i)) out.push_back({j, x.p - 1});
  return out;
}

K0Class k0_class(const Quiver& q, const Vertex& x) {
  if (q.is_sentinel(x)) return K0Class(q.rank());
  q.require_hat_i(x, "k0_class");
  const int n = q.rank();
  const auto& h = q.heights();
  const int h_min = *std::min_element(h.begin() + 1, h.end());
  const int h_max = *std::max_element(h.begin() + 1, h.end());
  std::map<Vertex, K0Class> table;
  auto at = [&](int i, int p) -> const K0Class& { return table.at({i, p}); };

  if (x.p >= q.height(x.i)) {
    // March right from the injective slice: [z] = sum [(j, p-1)] - [(i, p-2)].
    for (int p = h_min; p <= x.p; ++p) {
      for (int i = 1; i <= n; ++i) {
        Vertex v{i, p};
        if (!q.in_hat_i(v) || p < q.height(i)) continue;
        if (p == q.height(i)) {
          table[v] = q.injective_dim(i);
          continue;
        }
        K0Class c(n);
        for (int j : q.neighbors(i)) c += at(j, p - 1);
        c -= at(i, p - 2);
        table[v] = c;
      }
    }
  } else {
    // March left: [tau z] = sum [(j, p+1)] - [z].
    for (int p = h_max; p >= x.p; --p) {
      for (int i = 1; i <= n; ++i) {
        Vertex v{i, p};
        if (!q.in_hat_i(v) || p > q.height(i)) continue;
        if (p == q.height(i)) {
          table[v] = q.injective_dim(i);
          continue;
        }
        K0Class c(n);
        for (int j : q.neighbors(i)) c += at(j, p + 1);
        c -= at(i, p + 2);
        table[v] = c;
      }
    }
  }
  return table.at(x);
}

long long euler_form(const Quiver& q, const K0Class& d, const K0Class& e) {
  long long s = 0;
  for (int i = 1; i <= q.rank(); ++i) {
    s += d.coords[static_cast<std::size_t>(i - 1)] * e.coords[static_cast<std::size_t>(i - 1)];
  }
  for (auto [a, b] : q.arrows()) {
    s -= d.coords[static_cast<std::size_t>(a - 1)] * e.coords[static_cast<std::size_t>(b - 1)];
  }
  return s;
}

}  // namespace mdeg
