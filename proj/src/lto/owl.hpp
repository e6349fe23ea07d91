#pragma once

#include <string>

#include "ontology.hpp"

namespace lto {

// OWL2 functional-style syntax document for the whole ontology. One class
// per theme, one SubClassOf per parent edge, plus the root anchored under
// the BFO "generically dependent continuant" class. Deterministic: all
// sections sorted by expanded IRI.
std::string export_owl(const ThemeOntology& ont);

} // namespace lto
