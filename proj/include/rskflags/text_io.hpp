#pragma once

#include <string>

#include "rskflags/biarray.hpp"
#include "rskflags/partition.hpp"
#include "rskflags/tableau.hpp"

namespace rskflags {

// Text formats used by the CLI and fixtures:
//   tableau    rows separated by ';', entries by ','     e.g. "1,2;1,2;3"
//   array      top and bottom separated by '/'           e.g. "1,2,2,3,3 / 1,3,1,2,2"
//   matrix     rows separated by ';', entries by ','     e.g. "1,0,2;3,1,0"
//   sequence   comma-separated                           e.g. "2,2,1"

Composition parse_sequence(const std::string& s);
std::string format_sequence(const Composition& c);

Tableau parse_tableau(const std::string& s);
std::string format_tableau(const Tableau& t);

// JSON form: {"rows": [[1,2],[1,2],[3]]}
Tableau tableau_from_json(const std::string& text);
std::string tableau_to_json(const Tableau& t);

BiArray parse_array(const std::string& s, ArrayOrder order);
std::string format_array(const BiArray& a);

RelPosMatrix parse_matrix(const std::string& s);
std::string format_matrix(const RelPosMatrix& m);

}  // namespace rskflags
