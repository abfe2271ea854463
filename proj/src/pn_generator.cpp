#include "pnw/pn_generator.hpp"

namespace pnw {

template class PrefixNormalOracle<NoCounters>;
template class PrefixNormalOracle<OpCounters>;
template class PrefixNormalGenerator<NoCounters>;
template class PrefixNormalGenerator<OpCounters>;

}  // namespace pnw
