#include "rookdom/board.hpp"

namespace rookdom {

std::string to_string(BoardDims dims) { return std::to_string(dims.rows) + "x" + std::to_string(dims.cols); }

}  // namespace rookdom
