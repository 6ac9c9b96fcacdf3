#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "quigen/linalg.hpp"

namespace quigen {

// vertices are 0-based internally, 1-based in files and messages
struct Arrow {
  std::string name;
  int src = 0, tgt = 0;
};

struct RelationTerm {
  Scalar coeff;
  std::vector<int> arrows;  // arrow indices, in traversal order
};

// all terms parallel (same source and target) and of one common length >= 2
struct Relation {
  std::vector<RelationTerm> terms;
  int src = 0, tgt = 0, length = 0;
  int line = 0;  // provenance for diagnostics
};

struct AlgebraSpec {
  Field field = Field::rationals();
  int n_vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int nilpotency = 12;
  std::string label;  // file stem, for reports
};

// Finite-dimensional quotient of a path algebra by an admissible ideal.
// The basis consists of residue classes of paths, graded by path length;
// the first n_vertices entries are the trivial paths.
class Algebra {
 public:
  // computes the path basis and structure constants; throws
  // AdmissibilityError if some length-N path does not reduce to zero
  static std::shared_ptr<const Algebra> build(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return spec_; }
  const Field& field() const { return spec_.field; }
  int vertices() const { return spec_.n_vertices; }
  int n_arrows() const { return static_cast<int>(spec_.arrows.size()); }
  const Arrow& arrow(int a) const { return spec_.arrows[a]; }
  int nilpotency() const { return spec_.nilpotency; }

  int dim() const { return static_cast<int>(basis_src_.size()); }
  int basis_src(int b) const { return basis_src_[b]; }
  int basis_tgt(int b) const { return basis_tgt_[b]; }
  int basis_len(int b) const { return basis_len_[b]; }
  // a path word realizing basis class b
  const std::vector<int>& basis_word(int b) const { return basis_word_[b]; }
  std::string basis_name(int b) const;
  int unit_index(int v) const { return v; }

  // column p of right_mult(a) expands (class p)*(arrow a) over the basis
  const Mat& right_mult(int a) const { return right_mult_[a]; }

  // normal form of e_src * word; empty word gives the trivial path
  std::vector<Scalar> path_class(int src, const std::vector<int>& word) const;

  // arrows reversed, relation words reversed, same arrow order
  std::shared_ptr<const Algebra> opposite() const;

  std::string canonical_text() const;
  std::string hash_hex() const;

  int arrow_index(const std::string& name) const;  // -1 when absent

 private:
  Algebra() = default;
  AlgebraSpec spec_;
  std::vector<int> basis_src_, basis_tgt_, basis_len_;
  std::vector<std::vector<int>> basis_word_;
  std::vector<Mat> right_mult_;
  mutable std::shared_ptr<const Algebra> opp_cache_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

}  // namespace quigen
