#include "xpower/linear_operator.hpp"

#include <memory>
#include <stdexcept>

#include "xpower/errors.hpp"
#include "xpower/lu.hpp"

namespace xpower {

Vector LinearOperator::apply(const Vector& x) const {
    if (static_cast<int>(x.size()) != n) {
        throw std::invalid_argument("operator apply: vector length does not match dimension");
    }
    Vector y;
    apply_into(x, y);
    return y;
}

LinearOperator make_operator(const MatrixHandle& m) {
    auto stored = std::make_shared<const MatrixHandle>(m);
    LinearOperator op;
    op.n = m.n;
    op.label = m.label;
    op.apply_into = [stored](const Vector& x, Vector& y) {
        if (const auto* d = std::get_if<DenseMatrix>(&stored->storage)) {
            apply_dense_into(*d, x, y);
        } else {
            apply_csr_into(std::get<CsrMatrix>(stored->storage), x, y);
        }
    };
    return op;
}

LinearOperator shift_invert_operator(const MatrixHandle& k_matrix,
                                     const MatrixHandle& m_matrix,
                                     double shift) {
    if (k_matrix.n != m_matrix.n) {
        throw std::invalid_argument("shift_invert_operator: matrices must share one dimension");
    }
    DenseMatrix shifted = to_dense(k_matrix);
    DenseMatrix m_dense = to_dense(m_matrix);
    for (std::size_t i = 0; i < shifted.entries.size(); ++i) {
        shifted.entries[i] -= shift * m_dense.entries[i];
    }
    auto factors = std::make_shared<const LuFactors>(lu_factor(shifted));
    auto mass = std::make_shared<const MatrixHandle>(m_matrix);

    LinearOperator op;
    op.n = k_matrix.n;
    op.label = "shift_invert(" + k_matrix.label + "," + m_matrix.label + ")";
    op.apply_into = [factors, mass](const Vector& x, Vector& y) {
        Vector rhs = apply_handle(*mass, x);
        y = lu_solve(*factors, rhs);
    };
    return op;
}

} // namespace xpower
