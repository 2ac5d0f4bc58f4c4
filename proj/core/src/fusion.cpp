#include "anyons/fusion.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace anyons {

namespace {

void check_surface(const AnyonModel& model, const StandardSurface& surface) {
  auto ok = [&](Label a) { return a >= 0 && a < model.num_labels(); };
  for (Label a : surface.interior)
    if (!ok(a)) throw InputError("surface interior label out of range");
  if (!ok(surface.exterior))
    throw InputError("surface exterior label out of range");
}

}  // namespace

int TreeShape::Builder::leaf() {
  int first = 0;
  for (const Node& n : nodes) first += (n.left < 0) ? 1 : 0;
  nodes.push_back(Node{-1, -1, first, 1});
  return static_cast<int>(nodes.size()) - 1;
}

int TreeShape::Builder::join(int left, int right) {
  nodes.push_back(Node{left, right, nodes[left].first,
                       nodes[left].count + nodes[right].count});
  return static_cast<int>(nodes.size()) - 1;
}

TreeShape TreeShape::Builder::finish(int root) {
  // builder ids are already assigned children-first-left-to-right only when
  // callers build bottom-up; renormalize to guarantee canonical storage
  return normalize(nodes, root, {}).shape;
}

ShapeEdit TreeShape::normalize(const std::vector<Node>& raw, int root,
                               const std::vector<int>& origin) {
  ShapeEdit edit;
  if (root < 0) return edit;
  std::vector<Node>& out = edit.shape.nodes_;
  int leaf_pos = 0;
  std::function<int(int)> visit = [&](int id) -> int {
    const Node& nd = raw[id];
    Node n;
    if (nd.left < 0) {
      n = Node{-1, -1, leaf_pos++, 1};
    } else {
      int l = visit(nd.left);
      int r = visit(nd.right);
      n = Node{l, r, out[l].first, out[l].count + out[r].count};
    }
    out.push_back(n);
    edit.old_of_new.push_back(origin.empty() ? -1 : origin[id]);
    return static_cast<int>(out.size()) - 1;
  };
  edit.shape.root_ = visit(root);
  return edit;
}

const TreeShape::Node& TreeShape::node(int id) const {
  if (id < 0 || id >= num_nodes())
    throw InputError("tree node id out of range");
  return nodes_[id];
}

int TreeShape::leaf_node(int hole) const {
  for (int id = 0; id < num_nodes(); ++id)
    if (nodes_[id].left < 0 && nodes_[id].first == hole) return id;
  throw InputError("no leaf at hole position " + std::to_string(hole + 1));
}

int TreeShape::node_spanning(int first, int count) const {
  for (int id = 0; id < num_nodes(); ++id)
    if (nodes_[id].first == first && nodes_[id].count == count) return id;
  return -1;
}

std::vector<int> TreeShape::post_order() const {
  std::vector<int> order;
  std::function<void(int)> visit = [&](int id) {
    if (nodes_[id].left >= 0) {
      visit(nodes_[id].left);
      visit(nodes_[id].right);
    }
    order.push_back(id);
  };
  if (root_ >= 0) visit(root_);
  return order;
}

std::vector<int> TreeShape::internal_post_order() const {
  std::vector<int> order = post_order();
  std::erase_if(order, [&](int id) { return is_leaf(id); });
  return order;
}

TreeShape TreeShape::left_comb(int n) {
  if (n < 0) throw InputError("negative leaf count");
  if (n == 0) return TreeShape();
  Builder b;
  int acc = b.leaf();
  for (int i = 1; i < n; ++i) acc = b.join(acc, b.leaf());
  return b.finish(acc);
}

TreeShape TreeShape::parse(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  Builder b;
  std::vector<int> leaf_sequence;
  std::function<int()> parse_expr = [&]() -> int {
    skip_ws();
    if (pos >= text.size())
      throw InputError("unexpected end of tree shape \"" + text + "\"");
    if (text[pos] == '(') {
      ++pos;
      skip_ws();
      if (pos < text.size() && text[pos] == ')') {  // "()" the empty shape
        throw InputError("empty parentheses inside tree shape \"" + text + "\"");
      }
      int l = parse_expr();
      int r = parse_expr();
      skip_ws();
      if (pos >= text.size() || text[pos] != ')')
        throw InputError("expected ')' in tree shape \"" + text + "\"");
      ++pos;
      return b.join(l, r);
    }
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw InputError("expected leaf number or '(' in tree shape \"" + text + "\"");
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      v = v * 10 + (text[pos++] - '0');
    leaf_sequence.push_back(v);
    return b.leaf();
  };

  skip_ws();
  if (pos < text.size() && text[pos] == '(') {  // peek for "()"
    size_t save = pos;
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_ws();
      if (pos != text.size())
        throw InputError("trailing characters after tree shape \"" + text + "\"");
      return TreeShape();
    }
    pos = save;
  }
  int root = parse_expr();
  skip_ws();
  if (pos != text.size())
    throw InputError("trailing characters after tree shape \"" + text + "\"");
  for (size_t i = 0; i < leaf_sequence.size(); ++i)
    if (leaf_sequence[i] != static_cast<int>(i) + 1)
      throw InputError("tree shape leaves must read 1..n left to right in \"" +
                       text + "\"");
  return b.finish(root);
}

std::string TreeShape::to_string() const {
  if (root_ < 0) return "()";
  std::function<std::string(int)> render = [&](int id) -> std::string {
    const Node& nd = nodes_[id];
    if (nd.left < 0) return std::to_string(nd.first + 1);
    return "(" + render(nd.left) + " " + render(nd.right) + ")";
  };
  return render(root_);
}

std::vector<TreeShape> TreeShape::all_shapes(int n) {
  if (n < 0) throw InputError("negative leaf count");
  if (n == 0) return {TreeShape()};
  std::function<std::vector<std::string>(int, int)> gen =
      [&](int lo, int hi) -> std::vector<std::string> {
    if (lo == hi) return {std::to_string(lo + 1)};
    std::vector<std::string> out;
    for (int k = lo; k < hi; ++k)
      for (const auto& l : gen(lo, k))
        for (const auto& r : gen(k + 1, hi))
          out.push_back("(" + l + " " + r + ")");
    return out;
  };
  std::vector<TreeShape> shapes;
  for (const auto& s : gen(0, n - 1)) shapes.push_back(parse(s));
  return shapes;
}

ShapeEdit reassociate(const TreeShape& shape, int v, bool forward) {
  const TreeShape::Node& nv = shape.node(v);
  if (shape.is_leaf(v)) throw InputError("re-association at a leaf node");
  int pivot = forward ? nv.left : nv.right;
  if (shape.is_leaf(pivot))
    throw InputError(std::string("node does not match the ") +
                     (forward ? "((A B) C)" : "(A (B C))") +
                     " pattern required by this re-association");

  std::vector<TreeShape::Node> raw;
  std::vector<int> origin;
  std::function<int(int)> copy = [&](int id) -> int {
    const TreeShape::Node& nd = shape.node(id);
    TreeShape::Node out = nd;
    if (nd.left >= 0) {
      out.left = copy(nd.left);
      out.right = copy(nd.right);
    }
    raw.push_back(out);
    origin.push_back(id);
    return static_cast<int>(raw.size()) - 1;
  };
  auto fresh_join = [&](int l, int r, int orig) {
    raw.push_back(TreeShape::Node{l, r, 0, 0});
    origin.push_back(orig);
    return static_cast<int>(raw.size()) - 1;
  };
  std::function<int(int)> rebuild = [&](int id) -> int {
    if (id == v) {
      if (forward) {
        int a = copy(shape.node(pivot).left);
        int bsub = copy(shape.node(pivot).right);
        int c = copy(nv.right);
        int m = fresh_join(bsub, c, -1);
        return fresh_join(a, m, v);
      }
      int a = copy(nv.left);
      int bsub = copy(shape.node(pivot).left);
      int c = copy(shape.node(pivot).right);
      int l = fresh_join(a, bsub, -1);
      return fresh_join(l, c, v);
    }
    const TreeShape::Node& nd = shape.node(id);
    if (nd.left < 0) return copy(id);
    int l = rebuild(nd.left);
    int r = rebuild(nd.right);
    return fresh_join(l, r, id);
  };
  int root = rebuild(shape.root());
  return TreeShape::normalize(raw, root, origin);
}

ShapeEdit swap_children(const TreeShape& shape, int v) {
  if (shape.is_leaf(v)) throw InputError("child swap at a leaf node");
  std::vector<TreeShape::Node> raw;
  std::vector<int> origin;
  std::function<int(int)> rebuild = [&](int id) -> int {
    const TreeShape::Node& nd = shape.node(id);
    TreeShape::Node out = nd;
    if (nd.left >= 0) {
      int l = rebuild(nd.left);
      int r = rebuild(nd.right);
      out.left = (id == v) ? r : l;
      out.right = (id == v) ? l : r;
    }
    raw.push_back(out);
    origin.push_back(id);
    return static_cast<int>(raw.size()) - 1;
  };
  int root = rebuild(shape.root());
  return TreeShape::normalize(raw, root, origin);
}

std::string FusionTree::to_string(const AnyonModel& model) const {
  if (shape.root() < 0)
    return "():" + model.label_name(model.dual(surface.exterior));
  std::function<std::string(int)> render = [&](int id) -> std::string {
    const TreeShape::Node& nd = shape.node(id);
    if (nd.left < 0) return model.label_name(charges[id]);
    return "(" + render(nd.left) + " " + render(nd.right) +
           "):" + model.label_name(charges[id]);
  };
  return render(shape.root());
}

long long dim(const AnyonModel& model, const StandardSurface& surface) {
  check_surface(model, surface);
  std::vector<long long> counts(model.num_labels(), 0);
  counts[model.vacuum()] = 1;
  for (Label a : surface.interior) {
    std::vector<long long> next(model.num_labels(), 0);
    for (Label x = 0; x < model.num_labels(); ++x) {
      if (counts[x] == 0) continue;
      for (Label c = 0; c < model.num_labels(); ++c)
        if (model.fuses(x, a, c)) next[c] += counts[x];
    }
    counts = std::move(next);
  }
  return counts[model.dual(surface.exterior)];
}

std::vector<FusionTree> enumerate_basis(const AnyonModel& model,
                                        const StandardSurface& surface,
                                        const TreeShape& shape) {
  check_surface(model, surface);
  if (shape.leaf_count() != surface.num_holes())
    throw InputError("tree shape has " + std::to_string(shape.leaf_count()) +
                     " leaves but the surface has " +
                     std::to_string(surface.num_holes()) + " holes");
  std::vector<FusionTree> out;
  Label root_charge = model.dual(surface.exterior);
  if (surface.num_holes() == 0) {
    if (root_charge == model.vacuum())
      out.push_back(FusionTree{surface, shape, {}});
    return out;
  }
  std::vector<int> order = shape.post_order();
  std::vector<Label> charges(shape.num_nodes(), -1);
  std::function<void(size_t)> rec = [&](size_t idx) {
    if (idx == order.size()) {
      if (charges[shape.root()] == root_charge)
        out.push_back(FusionTree{surface, shape, charges});
      return;
    }
    int id = order[idx];
    const TreeShape::Node& nd = shape.node(id);
    if (nd.left < 0) {
      charges[id] = surface.interior[nd.first];
      rec(idx + 1);
      return;
    }
    Label l = charges[nd.left], r = charges[nd.right];
    for (Label t = 0; t < model.num_labels(); ++t) {
      if (!model.fuses(l, r, t)) continue;
      if (id == shape.root() && t != root_charge) continue;
      charges[id] = t;
      rec(idx + 1);
    }
    charges[id] = -1;
  };
  rec(0);
  return out;
}

StandardSurface glue(const AnyonModel& model, const StandardSurface& outer,
                     int hole, const StandardSurface& inner) {
  check_surface(model, outer);
  check_surface(model, inner);
  if (hole < 0 || hole >= outer.num_holes())
    throw InputError("glue hole index out of range");
  if (inner.exterior != model.dual(outer.interior[hole]))
    throw InputError(
        "seam mismatch: hole " + std::to_string(hole + 1) + " carries " +
        model.label_name(outer.interior[hole]) +
        " so the inner surface must have exterior label " +
        model.label_name(model.dual(outer.interior[hole])) + ", not " +
        model.label_name(inner.exterior));
  StandardSurface glued;
  glued.exterior = outer.exterior;
  glued.interior.reserve(outer.num_holes() - 1 + inner.num_holes());
  for (int i = 0; i < outer.num_holes(); ++i) {
    if (i == hole)
      glued.interior.insert(glued.interior.end(), inner.interior.begin(),
                            inner.interior.end());
    else
      glued.interior.push_back(outer.interior[i]);
  }
  return glued;
}

Observable observable_at(const TreeShape& shape, int node) {
  shape.node(node);  // range check
  return Observable{shape, node};
}

Eigen::MatrixXcd charge_projector(const AnyonModel& model,
                                  const StandardSurface& surface,
                                  const TreeShape& shape, const Observable& obs,
                                  Label a) {
  if (!(obs.shape == shape))
    throw InputError("observable belongs to a different decomposition");
  shape.node(obs.node);
  if (a < 0 || a >= model.num_labels())
    throw InputError("charge label out of range");
  std::vector<FusionTree> basis = enumerate_basis(model, surface, shape);
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(basis.size(), basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    Label charge = basis[i].charges.empty() ? model.dual(surface.exterior)
                                            : basis[i].charges[obs.node];
    if (charge == a) p(i, i) = 1;
  }
  return p;
}

long long torus_dim(const AnyonModel& model) {
  long long total = 0;
  for (Label a = 0; a < model.num_labels(); ++a)
    total += dim(model, StandardSurface{{a}, model.dual(a)});
  return total;
}

}  // namespace anyons
