#include "terw/dense.hpp"

#include <sstream>

namespace terw {

Mat identity(Index n) { return Mat::Identity(n, n); }

Mat zero(Index rows, Index cols) { return Mat::Zero(rows, cols); }

std::string write_matrix_text(const Mat& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) os << i << ' ' << j << ' ' << to_string(m(i, j)) << '\n';
    return os.str();
}

Mat read_matrix_text(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line)) throw DomainError("matrix text: missing header");
    std::istringstream hs(line);
    Index rows = -1, cols = -1;
    if (!(hs >> rows >> cols) || rows < 0 || cols < 0)
        throw DomainError("matrix text: bad header");
    Mat m = Mat::Zero(rows, cols);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Index i, j;
        std::string value;
        if (!(ls >> i >> j >> value))
            throw DomainError("matrix text: bad entry line '" + line + "'");
        if (i < 0 || i >= rows || j < 0 || j >= cols)
            throw DomainError("matrix text: entry out of bounds");
        m(i, j) = parse_rational(value);
    }
    return m;
}

}  // namespace terw
