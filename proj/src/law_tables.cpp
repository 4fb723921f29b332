#include "addlaw/addlaws.hpp"

namespace addlaw {

// Symbolic addition-law tables.
//
// Each law is a list of forms (one per homogeneous coordinate of the model);
// each form is a list of terms {xe, ye, c} where xe/ye are the exponent
// vectors of the X- and Y-monomial and c is a symbolic coefficient: a list of
// [integer, {param: exponent}] summands evaluated in the curve's field with
// the curve's parameters substituted. Parameter names: "a","b" for the short
// Weierstrass form y^2 = x^3 + ax + b; "d" for the quartic model; "a","d" for
// the twisted cubic model.
//
// The tuples labelled "printed" are transcribed exactly as published,
// including the defect in the quartic tuple's last two coordinates (they use
// the factor K = X0*Y3 - X3*Y0 where the correct factor is
// H = X2*Y2 - X1*Y1); the "corrected" table carries the repaired forms.
static const char* const kLawTablesJson = R"json(
{
  "weierstrass_y_22": {
    "num_coords": 3,
    "dx": 2,
    "dy": 2,
    "params": ["a", "b"],
    "forms": [
      [
        {"xe": [1,1,0], "ye": [0,2,0], "c": [[1, {}]]},
        {"xe": [0,2,0], "ye": [1,1,0], "c": [[1, {}]]},
        {"xe": [1,0,1], "ye": [0,1,1], "c": [[-6, {"b": 1}]]},
        {"xe": [0,1,1], "ye": [1,0,1], "c": [[-6, {"b": 1}]]},
        {"xe": [1,1,0], "ye": [1,0,1], "c": [[-2, {"a": 1}]]},
        {"xe": [0,1,1], "ye": [0,0,2], "c": [[1, {"a": 2}]]},
        {"xe": [1,0,1], "ye": [1,1,0], "c": [[-2, {"a": 1}]]},
        {"xe": [0,0,2], "ye": [0,1,1], "c": [[1, {"a": 2}]]},
        {"xe": [2,0,0], "ye": [0,1,1], "c": [[-1, {"a": 1}]]},
        {"xe": [1,1,0], "ye": [0,0,2], "c": [[-3, {"b": 1}]]},
        {"xe": [0,1,1], "ye": [2,0,0], "c": [[-1, {"a": 1}]]},
        {"xe": [0,0,2], "ye": [1,1,0], "c": [[-3, {"b": 1}]]}
      ],
      [
        {"xe": [0,2,0], "ye": [0,2,0], "c": [[1, {}]]},
        {"xe": [2,0,0], "ye": [2,0,0], "c": [[3, {"a": 1}]]},
        {"xe": [1,0,1], "ye": [1,0,1], "c": [[-4, {"a": 2}]]},
        {"xe": [2,0,0], "ye": [0,0,2], "c": [[-1, {"a": 2}]]},
        {"xe": [0,0,2], "ye": [2,0,0], "c": [[-1, {"a": 2}]]},
        {"xe": [2,0,0], "ye": [1,0,1], "c": [[9, {"b": 1}]]},
        {"xe": [1,0,1], "ye": [0,0,2], "c": [[-3, {"a": 1, "b": 1}]]},
        {"xe": [1,0,1], "ye": [2,0,0], "c": [[9, {"b": 1}]]},
        {"xe": [0,0,2], "ye": [1,0,1], "c": [[-3, {"a": 1, "b": 1}]]},
        {"xe": [0,0,2], "ye": [0,0,2], "c": [[-1, {"a": 3}], [-9, {"b": 2}]]}
      ],
      [
        {"xe": [0,2,0], "ye": [0,1,1], "c": [[1, {}]]},
        {"xe": [0,1,1], "ye": [0,2,0], "c": [[1, {}]]},
        {"xe": [2,0,0], "ye": [1,1,0], "c": [[3, {}]]},
        {"xe": [1,1,0], "ye": [2,0,0], "c": [[3, {}]]},
        {"xe": [1,0,1], "ye": [0,1,1], "c": [[2, {"a": 1}]]},
        {"xe": [0,1,1], "ye": [1,0,1], "c": [[2, {"a": 1}]]},
        {"xe": [1,1,0], "ye": [0,0,2], "c": [[1, {"a": 1}]]},
        {"xe": [0,1,1], "ye": [0,0,2], "c": [[3, {"b": 1}]]},
        {"xe": [0,0,2], "ye": [1,1,0], "c": [[1, {"a": 1}]]},
        {"xe": [0,0,2], "ye": [0,1,1], "c": [[3, {"b": 1}]]}
      ]
    ]
  },
  "edwards_printed_22": {
    "num_coords": 4,
    "dx": 2,
    "dy": 2,
    "params": ["d"],
    "forms": [
      [
        {"xe": [2,0,0,0], "ye": [2,0,0,0], "c": [[1, {}]]},
        {"xe": [0,0,0,2], "ye": [0,0,0,2], "c": [[-1, {"d": 2}]]}
      ],
      [
        {"xe": [1,1,0,0], "ye": [1,0,1,0], "c": [[1, {}]]},
        {"xe": [1,0,1,0], "ye": [1,1,0,0], "c": [[1, {}]]},
        {"xe": [0,1,0,1], "ye": [0,0,1,1], "c": [[-1, {"d": 1}]]},
        {"xe": [0,0,1,1], "ye": [0,1,0,1], "c": [[-1, {"d": 1}]]}
      ],
      [
        {"xe": [2,0,0,0], "ye": [1,0,0,1], "c": [[1, {}]]},
        {"xe": [1,0,0,1], "ye": [2,0,0,0], "c": [[-1, {}]]},
        {"xe": [1,0,0,1], "ye": [0,0,0,2], "c": [[1, {"d": 1}]]},
        {"xe": [0,0,0,2], "ye": [1,0,0,1], "c": [[-1, {"d": 1}]]}
      ],
      [
        {"xe": [1,1,0,0], "ye": [0,0,1,1], "c": [[1, {}]]},
        {"xe": [1,0,1,0], "ye": [0,1,0,1], "c": [[1, {}]]},
        {"xe": [0,1,0,1], "ye": [1,0,1,0], "c": [[-1, {}]]},
        {"xe": [0,0,1,1], "ye": [1,1,0,0], "c": [[-1, {}]]}
      ]
    ]
  },
  "edwards_corrected_22": {
    "num_coords": 4,
    "dx": 2,
    "dy": 2,
    "params": ["d"],
    "forms": [
      [
        {"xe": [2,0,0,0], "ye": [2,0,0,0], "c": [[1, {}]]},
        {"xe": [0,0,0,2], "ye": [0,0,0,2], "c": [[-1, {"d": 2}]]}
      ],
      [
        {"xe": [1,1,0,0], "ye": [1,0,1,0], "c": [[1, {}]]},
        {"xe": [1,0,1,0], "ye": [1,1,0,0], "c": [[1, {}]]},
        {"xe": [0,1,0,1], "ye": [0,0,1,1], "c": [[-1, {"d": 1}]]},
        {"xe": [0,0,1,1], "ye": [0,1,0,1], "c": [[-1, {"d": 1}]]}
      ],
      [
        {"xe": [1,0,1,0], "ye": [1,0,1,0], "c": [[1, {}]]},
        {"xe": [1,1,0,0], "ye": [1,1,0,0], "c": [[-1, {}]]},
        {"xe": [0,0,1,1], "ye": [0,0,1,1], "c": [[1, {"d": 1}]]},
        {"xe": [0,1,0,1], "ye": [0,1,0,1], "c": [[-1, {"d": 1}]]}
      ],
      [
        {"xe": [0,1,1,0], "ye": [0,0,2,0], "c": [[1, {}]]},
        {"xe": [0,0,2,0], "ye": [0,1,1,0], "c": [[1, {}]]},
        {"xe": [0,2,0,0], "ye": [0,1,1,0], "c": [[-1, {}]]},
        {"xe": [0,1,1,0], "ye": [0,2,0,0], "c": [[-1, {}]]}
      ]
    ]
  },
  "hessian_1": {
    "num_coords": 3,
    "dx": 2,
    "dy": 2,
    "params": ["a", "d"],
    "forms": [
      [
        {"xe": [1,1,0], "ye": [0,2,0], "c": [[1, {}]]},
        {"xe": [0,0,2], "ye": [1,0,1], "c": [[-1, {}]]}
      ],
      [
        {"xe": [1,0,1], "ye": [2,0,0], "c": [[1, {"a": 1}]]},
        {"xe": [0,2,0], "ye": [0,1,1], "c": [[-1, {}]]}
      ],
      [
        {"xe": [2,0,0], "ye": [1,1,0], "c": [[-1, {"a": 1}]]},
        {"xe": [0,1,1], "ye": [0,0,2], "c": [[1, {}]]}
      ]
    ]
  },
  "hessian_2": {
    "num_coords": 3,
    "dx": 2,
    "dy": 2,
    "params": ["a", "d"],
    "forms": [
      [
        {"xe": [1,0,1], "ye": [0,0,2], "c": [[1, {}]]},
        {"xe": [0,2,0], "ye": [1,1,0], "c": [[-1, {}]]}
      ],
      [
        {"xe": [2,0,0], "ye": [1,0,1], "c": [[-1, {"a": 1}]]},
        {"xe": [0,1,1], "ye": [0,2,0], "c": [[1, {}]]}
      ],
      [
        {"xe": [1,1,0], "ye": [2,0,0], "c": [[1, {"a": 1}]]},
        {"xe": [0,0,2], "ye": [0,1,1], "c": [[-1, {}]]}
      ]
    ]
  }
}
)json";

const Json& law_tables() {
  static const Json tables = Json::parse(kLawTablesJson);
  return tables;
}

AdditionLaw stored_law(const std::string& name, CurvePtr curve) {
  if (name == "bosma-lenstra" || name == "remark44")
    return bosma_lenstra_law(curve);
  if (name == "edwards-printed") return edwards_printed_law(curve);
  if (name == "edwards-corrected") return edwards_corrected_law(curve);
  if (name == "hessian-first") return hessian_first_law(curve);
  if (name == "hessian-second") return hessian_second_law(curve);
  throw error("unknown law '" + name +
              "' (expected bosma-lenstra, remark44, edwards-printed, "
              "edwards-corrected, hessian-first or hessian-second)");
}

std::vector<std::string> stored_law_names() {
  return {"bosma-lenstra", "edwards-printed", "edwards-corrected",
          "hessian-first", "hessian-second"};
}

}  // namespace addlaw
