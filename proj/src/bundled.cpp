#include "csurg/bundled.hpp"

#include "csurg/io.hpp"

namespace csurg::bundled {

// Keep byte-identical with the files under data/ (checked by the io tests).
std::string_view figure1_json() {
  return R"({
  "ambient": "tight",
  "comment": "L is a standard tb=-1 unknot; K1 and K2 carry contact (-1) surgeries. Reconstructed from the linking matrices M = [[0,-1],[-1,-2]], M0 = [[0,-1,0],[-1,0,-1],[0,-1,-2]] and tb0 = -1, which fix the framings (0 and -2) and all linking numbers. Framing 0 under contact (-1) forces tb(K1) = 1 (e.g. a max-tb right-handed trefoil); knot types are not otherwise determined.",
  "components": [
    {
      "id": "L",
      "tb": -1,
      "rot": 0,
      "euler_char": 1,
      "contact_coefficient": null
    },
    {
      "id": "K1",
      "tb": 1,
      "rot": 0,
      "euler_char": -1,
      "contact_coefficient": "-1"
    },
    {
      "id": "K2",
      "tb": -1,
      "rot": 0,
      "euler_char": 1,
      "contact_coefficient": "-1"
    }
  ],
  "linking": [
    [
      0,
      -1,
      0
    ],
    [
      -1,
      0,
      -1
    ],
    [
      0,
      -1,
      0
    ]
  ]
}
)";
}

std::string_view s1xs2_json() {
  return R"({
  "ambient": "tight",
  "comment": "Contact (+1) surgery on the standard tb=-1 unknot in the tight 3-sphere: the tight, Stein fillable S1 x S2. The dual knot is not rationally nullhomologous.",
  "components": [
    {
      "id": "U",
      "tb": -1,
      "rot": 0,
      "euler_char": 1,
      "contact_coefficient": "1"
    }
  ],
  "linking": [
    [
      0
    ]
  ]
}
)";
}

SurgeryDiagram figure1() { return parse_diagram(figure1_json()); }
SurgeryDiagram s1xs2() { return parse_diagram(s1xs2_json()); }

}  // namespace csurg::bundled
