#ifndef ATMATCH_CERTIFICATE_HPP
#define ATMATCH_CERTIFICATE_HPP

#include <string>
#include <string_view>

#include "atmatch/extractor.hpp"

namespace atmatch {

// Line-oriented canonical text:
//
//   atmatch-certificate 1
//   graph fnv1a64:...
//   mode plain|oriented|signed
//   edge <u> <v>
//   matching a-b,c-d        (oriented: head>tail; "-" when empty)
//   eta v3=2,v4=3           ("-" when empty)
//   eta_final v1=1,v3=2,v4=3
//   coefficient -1
//   step <depth> <Rule> key=value ...
//   end
//
// Names are resolved against `g`, which must be the certified graph.
std::string serialize_certificate(const PlaneGraph& g, const Certificate& cert);
Certificate parse_certificate(const PlaneGraph& g, std::string_view text);

}  // namespace atmatch

#endif
