#include "qamen/quiver.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace qamen {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> seen(vertices_.begin(), vertices_.end());
  if (seen.size() != vertices_.size()) throw Error(ErrorCode::InvalidInput, "duplicate vertex label");
  std::set<std::string> names;
  for (const auto& a : arrows_) {
    if (!names.insert(a.name).second) throw Error(ErrorCode::InvalidInput, "duplicate arrow " + a.name);
    src_.push_back(vertex_index(a.source));
    tgt_.push_back(vertex_index(a.target));
  }
  if (topological_order().size() != vertices_.size())
    throw Error(ErrorCode::Cyclic, "quiver has an oriented cycle");
}

std::size_t Quiver::vertex_index(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) throw Error(ErrorCode::VertexUnknown, label);
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Quiver::has_vertex(const std::string& label) const {
  return std::find(vertices_.begin(), vertices_.end(), label) != vertices_.end();
}

std::size_t Quiver::arrow_index(const std::string& name) const {
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (arrows_[a].name == name) return a;
  throw Error(ErrorCode::ArrowUnknown, name);
}

bool Quiver::is_sink(std::size_t v) const {
  return std::find(src_.begin(), src_.end(), v) == src_.end();
}

bool Quiver::is_source(std::size_t v) const {
  return std::find(tgt_.begin(), tgt_.end(), v) == tgt_.end();
}

bool Quiver::is_connected() const {
  const std::size_t n = vertices_.size();
  if (n == 0) return true;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    adj[src_[a]].push_back(tgt_[a]);
    adj[tgt_[a]].push_back(src_[a]);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

std::vector<std::size_t> Quiver::topological_order() const {
  const std::size_t n = vertices_.size();
  std::vector<std::size_t> indeg(n, 0);
  for (auto t : tgt_) ++indeg[t];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (src_[a] == v && --indeg[tgt_[a]] == 0) ready.push(tgt_[a]);
  }
  return order;
}

DimVector Quiver::paths_from(std::size_t from) const {
  DimVector count(vertices_.size(), 0);
  count[from] = 1;
  for (auto v : topological_order())
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (src_[a] == v) count[tgt_[a]] += count[v];
  return count;
}

DimVector Quiver::paths_to(std::size_t to) const {
  DimVector count(vertices_.size(), 0);
  count[to] = 1;
  auto order = topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t a = 0; a < arrows_.size(); ++a)
      if (tgt_[a] == *it) count[src_[a]] += count[*it];
  return count;
}

Quiver Quiver::induced(const std::vector<std::size_t>& vertex_indices) const {
  std::vector<std::string> vs;
  std::vector<bool> keep(vertices_.size(), false);
  for (auto v : vertex_indices) {
    vs.push_back(vertices_[v]);
    keep[v] = true;
  }
  std::vector<Arrow> as;
  for (std::size_t a = 0; a < arrows_.size(); ++a)
    if (keep[src_[a]] && keep[tgt_[a]]) as.push_back(arrows_[a]);
  return Quiver(std::move(vs), std::move(as));
}

Quiver Quiver::with_arrows(const std::vector<std::size_t>& arrow_indices) const {
  std::vector<Arrow> as;
  for (auto a : arrow_indices) as.push_back(arrows_[a]);
  return Quiver(vertices_, std::move(as));
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

namespace quivers {

namespace {
std::string arrow_name(int i) {
  std::string s;
  do {
    s.insert(s.begin(), static_cast<char>('a' + i % 26));
    i = i / 26 - 1;
  } while (i >= 0);
  return s;
}
}  // namespace

Quiver kronecker(int n) {
  std::vector<Arrow> as;
  for (int i = 0; i < n; ++i) as.push_back({arrow_name(i), "1", "2"});
  return Quiver({"1", "2"}, as);
}

Quiver path(int n) {
  std::vector<std::string> vs;
  std::vector<Arrow> as;
  for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
  for (int i = 1; i < n; ++i) as.push_back({arrow_name(i - 1), std::to_string(i), std::to_string(i + 1)});
  return Quiver(vs, as);
}

Quiver subspace(int n) {
  std::vector<std::string> vs{"0"};
  std::vector<Arrow> as;
  for (int i = 1; i <= n; ++i) {
    vs.push_back(std::to_string(i));
    as.push_back({arrow_name(i - 1), std::to_string(i), "0"});
  }
  return Quiver(vs, as);
}

Quiver a_tilde(int p, int q) {
  // Vertices 0 (source) and p (sink, shared when q > 0) around a cycle:
  // the clockwise path 0 -> 1 -> ... -> p and the anticlockwise path
  // 0 -> p+1 -> ... -> p+q-1 -> p.
  if (p < 1 || q < 1) throw Error(ErrorCode::InvalidInput, "A~ needs p, q >= 1");
  const int n = p + q;
  std::vector<std::string> vs;
  for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i));
  std::vector<Arrow> as;
  int k = 0;
  for (int i = 0; i < p; ++i) as.push_back({arrow_name(k++), std::to_string(i), std::to_string(i + 1)});
  int prev = 0;
  for (int j = 1; j < q; ++j) {
    int v = p + j;
    as.push_back({arrow_name(k++), std::to_string(prev), std::to_string(v)});
    prev = v;
  }
  as.push_back({arrow_name(k++), std::to_string(prev), std::to_string(p)});
  return Quiver(vs, as);
}

Quiver d_tilde(int n) {
  // Path c_1 -> ... -> c_{n-3}; leaves l1, l2 -> c_1 and c_{n-3} -> l3, l4.
  if (n < 4) throw Error(ErrorCode::InvalidInput, "D~ needs n >= 4");
  std::vector<std::string> vs{"l1", "l2"};
  const int spine = n - 3;
  for (int i = 1; i <= spine; ++i) vs.push_back("c" + std::to_string(i));
  vs.push_back("l3");
  vs.push_back("l4");
  std::vector<Arrow> as;
  int k = 0;
  as.push_back({arrow_name(k++), "l1", "c1"});
  as.push_back({arrow_name(k++), "l2", "c1"});
  for (int i = 1; i < spine; ++i)
    as.push_back({arrow_name(k++), "c" + std::to_string(i), "c" + std::to_string(i + 1)});
  as.push_back({arrow_name(k++), "c" + std::to_string(spine), "l3"});
  as.push_back({arrow_name(k++), "c" + std::to_string(spine), "l4"});
  return Quiver(vs, as);
}

Quiver e_tilde(int n) {
  // Arms (vertex counts excluding the center "c"): E~6 (2,2,2), E~7 (1,3,3), E~8 (1,2,5).
  std::vector<int> arms;
  if (n == 6) arms = {2, 2, 2};
  else if (n == 7) arms = {1, 3, 3};
  else if (n == 8) arms = {1, 2, 5};
  else throw Error(ErrorCode::InvalidInput, "E~ needs n in {6,7,8}");
  std::vector<std::string> vs{"c"};
  std::vector<Arrow> as;
  int k = 0;
  for (std::size_t arm = 0; arm < arms.size(); ++arm) {
    std::string prefix = std::string(1, static_cast<char>('x' + arm));
    for (int j = arms[arm]; j >= 1; --j) vs.push_back(prefix + std::to_string(j));
    for (int j = arms[arm]; j >= 1; --j) {
      std::string to = (j == 1) ? "c" : prefix + std::to_string(j - 1);
      as.push_back({arrow_name(k++), prefix + std::to_string(j), to});
    }
  }
  return Quiver(vs, as);
}

}  // namespace quivers

}  // namespace qamen
