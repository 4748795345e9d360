#pragma once

#include <cmath>

#include <Eigen/Dense>

namespace su2mod {

// normalized transform matrix sqrt(2/n) sin(pi l m / n), labels 1..n-1
inline Eigen::MatrixXd numeric_s_matrix(int n) {
    Eigen::MatrixXd s(n - 1, n - 1);
    const double scale = std::sqrt(2.0 / n);
    for (int l = 1; l < n; ++l)
        for (int m = 1; m < n; ++m)
            s(l - 1, m - 1) = scale * std::sin(M_PI * static_cast<double>(l) * m / n);
    return s;
}

}  // namespace su2mod
