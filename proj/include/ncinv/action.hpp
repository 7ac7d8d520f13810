#pragma once
#include <memory>
#include <mutex>
#include <vector>

#include "ncinv/basis_table.hpp"
#include "ncinv/hopf.hpp"

namespace ncinv {

struct ActionReport {
  bool ok = true;
  std::vector<std::string> failures;  // witnesses (h, relation) or structural
};

// A Hopf action on a presented algebra: one matrix per Hopf basis element on
// the graded generator space. Extension to every degree goes through the
// measuring condition h.(ab) = sum (h1.a)(h2.b), splitting each word at its
// first letter. Per-degree matrices are cached; cache population is
// single-writer, reads afterwards are concurrent.
class HopfAction {
 public:
  HopfAction(HopfData hopf, std::vector<Mat> generator_action,
             const BasisTable& table);

  const HopfData& hopf() const { return hopf_; }
  const BasisTable& table() const { return *table_; }

  // Well-definedness on the quotient: for every Hopf basis element h and
  // every relation r, the measured action of h on r (in the free algebra)
  // lies in the relation-ideal slice. Also re-checks degree blocks.
  ActionReport validate() const;

  // Action matrix of basis element h on A_d (columns = images of basis
  // words), in normal-form coordinates.
  const Mat& action_matrix(int h, int d) const;

  // Action matrix of the integral Lambda on A_d: the Reynolds projector.
  Mat reynolds(int d) const;

  // Canonical (RREF) basis of (A_d)^H, rows in ambient coordinates.
  std::vector<Vec> invariant_basis(int d) const;

  // Measured action of h on an arbitrary word of the free algebra, as a list
  // of (coeff, word); used by validate() before reductions are trusted.
  NcPoly act_free(int h, const Word& w) const;

 private:
  HopfData hopf_;
  std::vector<Mat> gen_action_;
  const BasisTable* table_;
  mutable std::vector<std::vector<std::unique_ptr<Mat>>> cache_;  // [d][h]
  mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();

  Vec act_on_basis_word(int h, int d, int word_index) const;
};

}  // namespace ncinv
