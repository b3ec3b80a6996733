#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "foldlift/coxeter.hpp"

namespace foldlift {

struct MomentGraphEdge {
  int from = 0;        // vertex indices; from < to in Bruhat order
  int to = 0;
  int root_index = 0;  // into datum().positive
};

// Parabolic moment graph on W^P: one edge w -> min-rep(s_alpha w) per
// positive root alpha with w < s_alpha w and w != min-rep(s_alpha w),
// labelled by alpha. Vertices are sorted by (length, lex-least word), so all
// indices and every rendering are deterministic.
class MomentGraph {
 public:
  const RootDatum& datum() const { return *datum_; }
  const std::vector<int>& parabolic() const { return parabolic_; }
  const std::vector<GroupElement>& vertices() const { return vertices_; }
  const std::vector<Word>& vertex_words() const { return vertex_words_; }
  const std::vector<MomentGraphEdge>& edges() const { return edges_; }
  const RootVector& edge_label(const MomentGraphEdge& e) const {
    return datum_->positive[e.root_index].coords;
  }

  int vertex_index(const GroupElement& w) const {
    auto it = index_.find(w.matrix());
    check(it != index_.end(), errc::not_in_quotient,
          "element " + word_str(lex_least_word(w)) + " is not a vertex of the graph");
    return it->second;
  }
  bool has_vertex(const GroupElement& w) const { return index_.count(w.matrix()) > 0; }

  // The variable prefix used when rendering labels/values on this graph.
  std::string var_prefix() const { return datum_->var_prefix(); }

  friend MomentGraph build_moment_graph(const RootDatum& datum, const std::vector<int>& P,
                                        const limits& lim);

 private:
  const RootDatum* datum_ = nullptr;
  std::vector<int> parabolic_;
  std::vector<GroupElement> vertices_;
  std::vector<Word> vertex_words_;
  std::vector<MomentGraphEdge> edges_;
  std::map<Mat, int> index_;
};

inline MomentGraph build_moment_graph(const RootDatum& datum, const std::vector<int>& P,
                                      const limits& lim = {}) {
  MomentGraph g;
  g.datum_ = &datum;
  g.parabolic_ = P;
  std::sort(g.parabolic_.begin(), g.parabolic_.end());
  g.vertices_ = enumerate_quotient(datum, g.parabolic_, lim);
  for (size_t i = 0; i < g.vertices_.size(); ++i) {
    g.index_.emplace(g.vertices_[i].matrix(), static_cast<int>(i));
    g.vertex_words_.push_back(lex_least_word(g.vertices_[i]));
  }
  for (size_t i = 0; i < g.vertices_.size(); ++i) {
    const GroupElement& w = g.vertices_[i];
    for (size_t k = 0; k < datum.positive.size(); ++k) {
      const Mat& refl = datum.positive[k].reflection;
      GroupElement sw(&datum, refl * w.matrix(), w.inverse_matrix() * refl);
      if (sw.length() <= w.length()) continue;  // need w < s_alpha w
      GroupElement target = min_coset_rep(sw, g.parabolic_);
      if (target == w) continue;
      g.edges_.push_back(MomentGraphEdge{static_cast<int>(i), g.vertex_index(target),
                                         static_cast<int>(k)});
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end(), [](const MomentGraphEdge& a, const MomentGraphEdge& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.to != b.to) return a.to < b.to;
    return a.root_index < b.root_index;
  });
  return g;
}

// Linear form rendering for edge labels: "a1+a2", "(1+t)*b1+b2", ...
inline std::string root_label_str(const RootVector& v, const std::string& prefix) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    std::string var = prefix + std::to_string(i + 1);
    std::string piece;
    if (v[i].is_one())
      piece = var;
    else if (v[i] == QElem(-1))
      piece = "-" + var;
    else if (v[i].a() != 0 && v[i].b() != 0)
      piece = "(" + v[i].str() + ")*" + var;
    else
      piece = v[i].str() + "*" + var;
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += piece;
    else
      out += "+" + piece;
  }
  return out.empty() ? "0" : out;
}

// Deterministic DOT digraph; node names are lex-least reduced words.
inline std::string to_dot(const MomentGraph& g) {
  std::string out = "digraph momentgraph {\n";
  for (size_t i = 0; i < g.vertices().size(); ++i)
    out += "  \"" + word_str(g.vertex_words()[i]) + "\";\n";
  for (const auto& e : g.edges()) {
    out += "  \"" + word_str(g.vertex_words()[e.from]) + "\" -> \"" +
           word_str(g.vertex_words()[e.to]) + "\" [label=\"" +
           root_label_str(g.edge_label(e), g.var_prefix()) + "\"];\n";
  }
  out += "}\n";
  return out;
}

inline nlohmann::json to_json(const MomentGraph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& w : g.vertex_words()) j["vertices"].push_back(word_str(w));
  j["edges"] = nlohmann::json::array();
  for (const auto& e : g.edges()) {
    nlohmann::json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["label_coords"] = nlohmann::json::array();
    for (const auto& c : g.edge_label(e)) je["label_coords"].push_back(c.str());
    j["edges"].push_back(je);
  }
  return j;
}

}  // namespace foldlift
