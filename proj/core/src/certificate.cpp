#include <algorithm>
#include <cstdio>

#include "sumset/error.hpp"
#include "sumset/extraction.hpp"
#include "sumset/hash.hpp"
#include "sumset/json_io.hpp"

namespace sumset {

std::string inputs_digest(const ExtractionCertificate& cert) {
  Json inputs = Json{{"r", cert.r}};
  if (cert.lemma) inputs["witness"] = cert.lemma->witness;
  if (cert.pipeline) inputs["colourings"] = cert.pipeline->colourings;
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx",
                static_cast<unsigned long long>(mix64(fnv1a(inputs.dump()))));
  return hex;
}

PointColouring certificate_colouring(const ExtractionCertificate& cert) {
  if (cert.mode == ExtractionCertificate::Mode::kLemma) {
    if (!cert.lemma) throw Error(ErrorKind::kParse, "lemma certificate without lemma data");
    const auto& v = cert.lemma->witness.v;
    Colour colours = static_cast<Colour>(std::max<std::size_t>(cert.r, 1));
    for (Colour c : v) colours = std::max(colours, c + 1);
    return synthetic_colouring(cert.lemma->witness, cert.r, colours);
  }
  if (!cert.pipeline) throw Error(ErrorKind::kParse, "pipeline certificate without pipeline data");
  return world_colouring(cert.pipeline->colourings);
}

}  // namespace sumset
