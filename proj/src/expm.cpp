#include "abcage/expm.hpp"

#include <Eigen/LU>
#include <cmath>

namespace abcage {

ComplexMatrix matrix_exponential(const ComplexMatrix& A) {
    if (A.rows() != A.cols())
        throw ShapeError("matrix_exponential: matrix must be square");
    if (!A.allFinite())
        throw InvalidParameter("matrix_exponential: entries must be finite");

    const int n = static_cast<int>(A.rows());
    const ComplexMatrix I = ComplexMatrix::Identity(n, n);

    // degree-13 Pade coefficients and its scaling threshold (Higham 2005)
    static const double b[14] = {
        64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
        1187353796428800.0,  129060195264000.0,   10559470521600.0,
        670442572800.0,      33522128640.0,       1323241920.0,
        40840800.0,          960960.0,            16380.0,
        182.0,               1.0};
    const double theta13 = 5.371920351148152;

    const double norm1 = A.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > theta13)
        squarings = static_cast<int>(std::ceil(std::log2(norm1 / theta13)));
    const ComplexMatrix As = A / std::pow(2.0, squarings);

    const ComplexMatrix A2 = As * As;
    const ComplexMatrix A4 = A2 * A2;
    const ComplexMatrix A6 = A2 * A4;
    const ComplexMatrix U =
        As * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) +
              b[7] * A6 + b[5] * A4 + b[3] * A2 + b[1] * I);
    const ComplexMatrix V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) +
                            b[6] * A6 + b[4] * A4 + b[2] * A2 + b[0] * I;

    ComplexMatrix F = (V - U).partialPivLu().solve(V + U);
    for (int i = 0; i < squarings; ++i) F = F * F;
    return F;
}

} // namespace abcage
