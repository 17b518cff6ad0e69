#include "hankel/matrix.hpp"

namespace hankel {

template class DenseMatrix<Rational>;

}  // namespace hankel
