#include "octet/lattice.hpp"

#include "octet/integer_matrix.hpp"
#include "octet/linalg.hpp"

#include <cctype>
#include <stdexcept>

namespace octet::lattice {

GramLattice::GramLattice(MatrixZ gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  if (gram_.rows() != gram_.cols()) throw std::invalid_argument("Gram matrix must be square");
  if (gram_ != gram_.transpose()) throw std::invalid_argument("Gram matrix must be symmetric");
}

Integer GramLattice::determinant() const {
  if (rank() == 0) return 1;
  const Rational d = octet::determinant(to_rational(gram_));
  return numerator(d);
}

bool GramLattice::is_even() const {
  for (Index i = 0; i < rank(); ++i)
    if (gram_(i, i) % 2 != 0) return false;
  return true;
}

GramLattice GramLattice::operator+(const GramLattice& other) const {
  MatrixZ g = MatrixZ::Zero(rank() + other.rank(), rank() + other.rank());
  g.topLeftCorner(rank(), rank()) = gram_;
  g.bottomRightCorner(other.rank(), other.rank()) = other.gram_;
  std::string n = name_.empty() ? other.name_ : other.name_.empty() ? name_ : name_ + "+" + other.name_;
  return GramLattice(std::move(g), std::move(n));
}

GramLattice GramLattice::rescaled(const Integer& m) const {
  return GramLattice(MatrixZ(gram_ * m), name_ + "(" + m.str() + ")");
}

GramLattice GramLattice::power(int k) const {
  GramLattice out(MatrixZ(0, 0), "");
  for (int i = 0; i < k; ++i) out = out + *this;
  return GramLattice(out.gram(), k == 1 ? name_ : name_ + "^" + std::to_string(k));
}

Rational GramLattice::inner(const VectorQ& x, const VectorQ& y) const {
  return x.dot(to_rational(gram_) * y);
}

MatrixZ d_lattice_basis(int n) {
  if (n < 2) throw std::invalid_argument("D_n needs n >= 2");
  MatrixZ b = MatrixZ::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    b(i, i) = 1;
    b(i, i + 1) = -1;
  }
  b(n - 1, n - 2) = 1;
  b(n - 1, n - 1) = 1;
  return b;
}

namespace {

GramLattice base_lattice(const std::string& name) {
  if (name == "U") {
    MatrixZ g(2, 2);
    g << 0, 1, 1, 0;
    return GramLattice(g, "U");
  }
  if (name == "A1") return GramLattice(MatrixZ::Constant(1, 1, Integer(-2)), "A1");
  if (name == "E8") {
    // Negative of the E8 Cartan matrix, chain 1-2-3-4-5-6-7 with 8 on 5.
    MatrixZ g = MatrixZ::Zero(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = -2;
    auto link = [&](int i, int j) { g(i, j) = g(j, i) = 1; };
    for (int i = 0; i < 6; ++i) link(i, i + 1);
    link(4, 7);
    return GramLattice(g, "E8");
  }
  if (name.size() >= 2 && name[0] == 'D') {
    const int n = std::stoi(name.substr(1));
    if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
    const MatrixZ b = d_lattice_basis(n);
    return GramLattice(MatrixZ(-(b * b.transpose())), name);
  }
  throw std::invalid_argument("unknown lattice '" + name + "'");
}

}  // namespace

GramLattice named_lattice(std::string_view expression) {
  std::string expr;
  // Normalize the unicode direct-sum sign and whitespace to '+'.
  for (std::size_t i = 0; i < expression.size(); ++i) {
    if (expression.substr(i, 3) == "⊕") {
      expr += '+';
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(expression[i]))) {
      expr += expression[i];
    }
  }
  GramLattice total(MatrixZ(0, 0));
  std::size_t pos = 0;
  if (expr.empty()) throw std::invalid_argument("empty lattice expression");
  while (pos < expr.size()) {
    std::size_t end = expr.find('+', pos);
    if (end == std::string::npos) end = expr.size();
    std::string term = expr.substr(pos, end - pos);
    pos = end + 1;
    if (term.empty()) throw std::invalid_argument("malformed lattice expression");
    int power = 1;
    if (auto caret = term.find('^'); caret != std::string::npos) {
      power = std::stoi(term.substr(caret + 1));
      term = term.substr(0, caret);
    }
    Integer scale = 1;
    if (auto paren = term.find('('); paren != std::string::npos) {
      if (term.back() != ')') throw std::invalid_argument("malformed rescaling in '" + term + "'");
      scale = Integer(term.substr(paren + 1, term.size() - paren - 2));
      term = term.substr(0, paren);
    }
    GramLattice piece = base_lattice(term);
    if (scale != 1) piece = piece.rescaled(scale);
    total = total + piece.power(power);
  }
  return total;
}

GramLattice lattice_N() { return named_lattice("U+U(2)+D4+D4"); }
GramLattice lattice_M() { return named_lattice("U(2)+D4+D4"); }

Overlattice overlattice(const GramLattice& l, const VectorQ& glue) {
  if (glue.size() != l.rank()) throw std::invalid_argument("glue vector has the wrong length");
  const MatrixQ g = to_rational(l.gram());
  const VectorQ pairings = g * glue;
  for (Index i = 0; i < pairings.size(); ++i)
    if (!is_integer(pairings(i))) throw std::domain_error("glue vector is not in the dual lattice");
  const VectorQ doubled = glue * Rational(2);
  for (Index i = 0; i < doubled.size(); ++i)
    if (!is_integer(doubled(i))) throw std::domain_error("glue vector does not have order 2 modulo L");
  const Rational norm = glue.dot(pairings);
  if (!is_integer(norm / 2)) throw std::domain_error("glue vector has odd square; overlattice would not be even");

  MatrixZ gens(l.rank() + 1, l.rank());
  gens.topRows(l.rank()) = MatrixZ::Identity(l.rank(), l.rank()) * 2;
  gens.row(l.rank()) = to_integer(doubled.transpose());
  const MatrixQ basis = to_rational(hermite_row_basis(gens)) / Rational(2);
  const MatrixZ gram = to_integer(basis * g * basis.transpose());
  return {GramLattice(gram, l.name().empty() ? "" : l.name() + "+glue"), basis};
}

}  // namespace octet::lattice
