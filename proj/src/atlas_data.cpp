#include <string>

#include "msg/atlas.hpp"

namespace msg {

// Catalog of the classified arcs: presentations where the source prints
// them, stabilizer words where printed, the invariant table rows (printed
// values verbatim, corrections stored alongside, never in place), the
// generator-map correspondences, and the four maximum-order tables.
const std::string& builtin_atlas_json() {
  static const std::string text = R"json({
  "schema": 1,
  "orbifolds": [
    {
      "id": "O15E",
      "arcs": [
        {"arc": "a", "genus": 2, "knotted": false, "row": 0},
        {"arc": "a", "genus": 29, "knotted": false, "row": 40}
      ]
    },
    {
      "id": "O26",
      "order": 24,
      "arcs": [
        {"arc": "a", "genus": 3, "knotted": false, "row": 1},
        {"arc": "a'", "genus": 3, "knotted": false, "row": 2}
      ]
    },
    {
      "id": "O19",
      "arcs": [
        {"arc": "a", "genus": 4, "knotted": false, "row": 3},
        {"arc": "a", "genus": 16, "knotted": false, "row": 28},
        {"arc": "a", "genus": 841, "knotted": false, "row": 39}
      ]
    },
    {
      "id": "O27",
      "order": 48,
      "arcs": [
        {"arc": "a", "genus": 5, "knotted": false, "row": 4},
        {"arc": "a'", "genus": 5, "knotted": false, "row": 5},
        {"arc": "b", "genus": 7, "knotted": false, "row": 24},
        {"arc": "b'", "genus": 7, "knotted": false, "row": 25}
      ]
    },
    {
      "id": "O24",
      "order": 60,
      "arcs": [
        {"arc": "a", "genus": 6, "knotted": false, "row": 6}
      ]
    },
    {
      "id": "O20C",
      "order": 96,
      "presentation": "generators: x, y, z\nrelators:\nx^2\ny^3\nz^2\n(y^-1*x)^2\n(y^-1*(x*z)^3*x)^2\n(y^-1*x*z^-1)^2\n",
      "arcs": [
        {"arc": "a", "genus": 9, "knotted": false, "row": 7,
         "words": {"u": "y^-1*(x*z)^3*x", "ul": "y^-1*x*z^-1", "ur": "y"}},
        {"arc": "b", "genus": 9, "knotted": true, "row": 7,
         "words": {"u": "(x*z)^2*x", "ul": "y^-1*(x*z)^3*x", "ur": "x*z*x*y*x*z*x"}}
      ]
    },
    {
      "id": "O28",
      "order": 120,
      "presentation": "generators: x, y, z\nrelators:\nx^5\ny^2\nz^2\n(x*z)^3\n(x*y)^2\n(y*z^-1)^2\n",
      "arcs": [
        {"arc": "a", "genus": 11, "knotted": false, "row": 8},
        {"arc": "a'", "genus": 11, "knotted": false, "row": 9,
         "words": {"u": "x*y*z^-1*x^-1", "ul": "x*z*x^-1", "ur": "x*z"}},
        {"arc": "b", "genus": 19, "knotted": false, "row": 29},
        {"arc": "b'", "genus": 19, "knotted": false, "row": 30},
        {"arc": "c", "genus": 29, "knotted": false, "row": 40},
        {"arc": "c'", "genus": 29, "knotted": false, "row": 41},
        {"arc": "d", "genus": 21, "knotted": true, "row": 32}
      ]
    },
    {
      "id": "O34",
      "order": 120,
      "presentation": "generators: x, y, z\nrelators:\nx^2\ny^3\nz^2\n(z*y)^2\n(y*x*z)^2\n(y*x*z*x)^3\n",
      "arcs": [
        {"arc": "a", "genus": 11, "knotted": false, "row": 10},
        {"arc": "a'", "genus": 11, "knotted": false, "row": 11,
         "words": {"u": "z*y", "ul": "x", "ur": "y"}},
        {"arc": "b", "genus": 11, "knotted": true, "row": 9,
         "words": {"u": "x^-1", "ul": "y^-1*z^-1", "ur": "z^-1*x^-1*y^-1*x"}},
        {"arc": "c", "genus": 21, "knotted": true, "row": 32}
      ]
    },
    {
      "id": "O29",
      "order": 192,
      "arcs": [
        {"arc": "a", "genus": 17, "knotted": false, "row": 12},
        {"arc": "a'", "genus": 17, "knotted": false, "row": 13},
        {"arc": "b", "genus": 41, "knotted": false, "row": 34},
        {"arc": "b'", "genus": 41, "knotted": false, "row": 35}
      ]
    },
    {
      "id": "O21A",
      "order": 288,
      "arcs": [
        {"arc": "a", "genus": 25, "knotted": false, "row": 14}
      ]
    },
    {
      "id": "O33",
      "order": 1152,
      "arcs": [
        {"arc": "a", "genus": 97, "knotted": false, "row": 15},
        {"arc": "a'", "genus": 97, "knotted": false, "row": 16}
      ]
    },
    {
      "id": "O22B",
      "order": 1440,
      "presentation": "generators: x, y, z\nrelators:\nx^2\ny^3\nz^2\n(y^-1*x)^2\n(y^-1*(x*z)^5*x)^2\n(y^-1*x*z^-1)^2\n",
      "arcs": [
        {"arc": "a", "genus": 121, "knotted": false, "row": 17,
         "words": {"u": "y^-1*(x*z)^5*x", "ul": "y^-1*x*z^-1", "ur": "y"}},
        {"arc": "b", "genus": 121, "knotted": true, "row": 17,
         "words": {"u": "(x*z)^4*x", "ul": "y^-1*x*z^-1",
                   "ur": "(x*z*x*z)*y*(x*z*x*z)^-1"}}
      ]
    },
    {
      "id": "O38",
      "order": 2880,
      "arcs": [
        {"arc": "a", "genus": 241, "knotted": false, "row": 18},
        {"arc": "b", "genus": 241, "knotted": true, "row": 19},
        {"arc": "c", "genus": 241, "knotted": true, "row": 20},
        {"arc": "a'", "genus": 241, "knotted": false, "row": 21},
        {"arc": "d", "genus": 481, "knotted": true, "row": 33}
      ]
    },
    {
      "id": "O30",
      "order": 7200,
      "arcs": [
        {"arc": "a", "genus": 601, "knotted": false, "row": 22},
        {"arc": "a'", "genus": 601, "knotted": false, "row": 23},
        {"arc": "b", "genus": 1681, "knotted": false, "row": 36},
        {"arc": "b'", "genus": 1681, "knotted": false, "row": 37}
      ]
    },
    {
      "id": "O21B",
      "order": 384,
      "arcs": [
        {"arc": "a", "genus": 49, "knotted": false, "row": 26}
      ]
    },
    {
      "id": "O25",
      "order": 576,
      "arcs": [
        {"arc": "a", "genus": 73, "knotted": false, "row": 27}
      ]
    },
    {
      "id": "O22C",
      "order": 2400,
      "presentation": "generators: x, y, z\nrelators:\nx^2\ny^2\nz^2\n(y^-1*x)^2\n(y^-1*(x*z)^3*x)^2\n(y^-1*x*z^-1)^5\n",
      "arcs": [
        {"arc": "a", "genus": 361, "knotted": false, "row": 31,
         "words": {"u": "x^-1*y*(z*x)^-3", "ul": "x^-1*y*x", "ur": "z^-1*y^-1*x"}},
        {"arc": "b", "genus": 361, "knotted": true, "row": 31,
         "words": {"u": "(x*z)^-2*z^-1", "ul": "x^-1*y*(z*x)^-3",
                   "ur": "z*x*y*(x*z)^2"}}
      ]
    },
    {
      "id": "O22D",
      "order": 3600,
      "arcs": [
        {"arc": "a", "genus": 841, "knotted": false, "row": 38}
      ]
    }
  ],
  "rows": [
    {"labels": ["O15E.a(2)"], "genus": 2,
     "printed": {"d": {"2": 3, "3": 2}, "E": 6, "D": 2, "G": 4},
     "family": "dipole(3)"},
    {"labels": ["O26.a(3)"], "genus": 3,
     "printed": {"d": {"2": 4, "4": 2}, "E": 8, "D": 2, "G": 4},
     "family": "dipole(4)"},
    {"labels": ["O26.a'(3)"], "genus": 3,
     "printed": {"d": {"2": 6, "3": 4}, "E": 12, "D": 4, "G": 6},
     "family": "complete(4)"},
    {"labels": ["O19.a(4)"], "genus": 4,
     "printed": {"d": {"2": 9, "3": 6}, "E": 18, "D": 4, "G": 8},
     "family": "complete_bipartite(3,3)"},
    {"labels": ["O27.a(5)"], "genus": 5,
     "printed": {"d": {"2": 6, "5": 2}, "E": 12, "D": 2, "G": 4},
     "corrected": {"d": {"2": 6, "6": 2}, "E": 12, "D": 2, "G": 4},
     "family": "dipole(6)"},
    {"labels": ["O27.a'(5)"], "genus": 5,
     "printed": {"d": {"2": 12, "3": 8}, "E": 24, "D": 6, "G": 8},
     "family": "platonic(cube)"},
    {"labels": ["O24.a(6)"], "genus": 6,
     "printed": {"d": {"2": 10, "4": 5}, "E": 20, "D": 4, "G": 6},
     "family": "complete(5)"},
    {"labels": ["O20C.a(9)", "O20C.b(9)"], "genus": 9,
     "printed": {"d": {"2": 24, "3": 16}, "E": 48, "D": 8, "G": 12},
     "family": "gen_petersen(8,3)"},
    {"labels": ["O28.a(11)"], "genus": 11,
     "printed": {"d": {"2": 12, "12": 2}, "E": 24, "D": 2, "G": 4},
     "family": "dipole(12)"},
    {"labels": ["O28.a'(11)", "O34.b(11)"], "genus": 11,
     "printed": {"d": {"2": 30, "3": 20}, "E": 60, "D": 10, "G": 10},
     "family": "platonic(dodecahedron)"},
    {"labels": ["O34.a(11)"], "genus": 11,
     "printed": {"d": {"2": 20, "4": 10}, "E": 40, "D": 6, "G": 8},
     "family": "crown(5)"},
    {"labels": ["O34.a'(11)"], "genus": 11,
     "printed": {"d": {"2": 30, "3": 20}, "E": 60, "D": 10, "G": 12},
     "family": "gen_petersen(10,3)"},
    {"labels": ["O29.a(17)"], "genus": 17,
     "printed": {"d": {"2": 24, "6": 8}, "E": 48, "D": 4, "G": 6}},
    {"labels": ["O29.a'(17)"], "genus": 17,
     "printed": {"d": {"2": 32, "4": 16}, "E": 64, "D": 8, "G": 8},
     "family": "hypercube(4)"},
    {"labels": ["O21A.a(25)"], "genus": 25,
     "printed": {"d": {"2": 72, "3": 48}, "E": 144, "D": 12, "G": 16}},
    {"labels": ["O33.a(97)"], "genus": 97,
     "printed": {"d": {"2": 288, "3": 192}, "E": 576, "D": 24, "G": 16}},
    {"labels": ["O33.a'(97)"], "genus": 97,
     "printed": {"d": {"2": 144, "6": 48}, "E": 288, "D": 8, "G": 8}},
    {"labels": ["O22B.a(121)", "O22B.b(121)"], "genus": 121,
     "printed": {"d": {"2": 360, "3": 240}, "E": 720, "D": 22, "G": 20}},
    {"labels": ["O38.a(241)"], "genus": 241,
     "printed": {"d": {"2": 480, "4": 240}, "E": 960, "D": 20, "G": 12}},
    {"labels": ["O38.b(241)"], "genus": 241,
     "printed": {"d": {"2": 720, "3": 480}, "E": 1440, "D": 21, "G": 24}},
    {"labels": ["O38.c(241)"], "genus": 241,
     "printed": {"d": {"2": 480, "4": 240}, "E": 960, "D": 14, "G": 16}},
    {"labels": ["O38.a'(241)"], "genus": 241,
     "printed": {"d": {"2": 720, "3": 480}, "E": 1440, "D": 30, "G": 18}},
    {"labels": ["O30.a(601)"], "genus": 601,
     "printed": {"d": {"2": 720, "12": 120}, "E": 1440, "D": 10, "G": 6}},
    {"labels": ["O30.a'(601)"], "genus": 601,
     "printed": {"d": {"2": 1200, "4": 600}, "E": 2400, "D": 30, "G": 10}},
    {"labels": ["O27.b(7)"], "genus": 7,
     "printed": {"d": {"2": 8, "8": 2}, "E": 16, "D": 2, "G": 4},
     "family": "dipole(8)"},
    {"labels": ["O27.b'(7)"], "genus": 7,
     "printed": {"d": {"2": 12, "4": 6}, "E": 24, "D": 4, "G": 6},
     "family": "platonic(octahedron)"},
    {"labels": ["O21B.a(49)"], "genus": 49,
     "printed": {"d": {"2": 96, "4": 48}, "E": 192, "D": 10, "G": 12}},
    {"labels": ["O25.a(73)"], "genus": 73,
     "printed": {"d": {"2": 96, "8": 24}, "E": 192, "D": 6, "G": 6}},
    {"labels": ["O19.a(16)"], "genus": 16,
     "printed": {"d": {"2": 25, "5": 10}, "E": 50, "D": 4, "G": 8},
     "family": "complete_bipartite(5,5)"},
    {"labels": ["O28.b(19)"], "genus": 19,
     "printed": {"d": {"2": 20, "20": 2}, "E": 40, "D": 2, "G": 4},
     "family": "dipole(20)"},
    {"labels": ["O28.b'(19)"], "genus": 19,
     "printed": {"d": {"2": 30, "5": 12}, "E": 60, "D": 6, "G": 6},
     "family": "platonic(icosahedron)"},
    {"labels": ["O22C.a(361)", "O22C.b(361)"], "genus": 361,
     "printed": {"d": {"2": 600, "5": 240}, "E": 1200, "D": 14, "G": 12}},
    {"labels": ["O28.d(21)", "O34.c(21)"], "genus": 21,
     "printed": {"d": {"2": 960, "3": 40}, "E": 120, "D": 12, "G": 16},
     "corrected": {"d": {"2": 60, "3": 40}, "E": 120, "D": 12, "G": 16}},
    {"labels": ["O38.d(481)"], "genus": 481,
     "printed": {"d": {"2": 1440, "3": 960}, "E": 2880, "D": 36, "G": 24}},
    {"labels": ["O29.b(41)"], "genus": 41,
     "printed": {"d": {"3": 32, "4": 24}, "E": 96, "D": 6, "G": 6}},
    {"labels": ["O29.b'(41)"], "genus": 41,
     "printed": {"d": {"4": 16, "8": 8}, "E": 64, "D": 4, "G": 4}},
    {"labels": ["O30.b(1681)"], "genus": 1681,
     "printed": {"d": {"3": 1200, "5": 720}, "E": 3600, "D": 20, "G": 6}},
    {"labels": ["O30.b'(1681)"], "genus": 1681,
     "printed": {"d": {"4": 600, "20": 120}, "E": 2400, "D": 10, "G": 4}},
    {"labels": ["O22D.a(841)"], "genus": 841,
     "printed": {"d": {"3": 600, "5": 360}, "E": 1800, "D": 12, "G": 8}},
    {"labels": ["O19.a(841)"], "genus": 841,
     "printed": {"d": {"2": 900, "30": 60}, "E": 1800, "D": 4, "G": 8},
     "family": "complete_bipartite(30,30)"},
    {"labels": ["O28.c(29)", "O15E.a(29)"], "genus": 29,
     "printed": {"d": {"2": 30, "30": 2}, "E": 60, "D": 2, "G": 4},
     "family": "dipole(30)"},
    {"labels": ["O28.c'(29)"], "genus": 29,
     "printed": {"d": {"3": 20, "5": 12}, "E": 60, "D": 6, "G": 4}}
  ],
  "maps": [
    {"from": "O28.a'", "to": "O34.b", "images": ["v", "vl", "vr"]},
    {"from": "O20C.a", "to": "O20C.b", "images": ["v", "vl", "vr"],
     "corrected": ["v", "vl*v", "vr"]},
    {"from": "O22B.a", "to": "O22B.b", "images": ["v", "vl", "vr"]},
    {"from": "O22C.a", "to": "O22C.b", "images": ["v", "vl*v", "vr^2"]}
  ],
  "tables": {
    "m": {
      "rows": [
        {"num": 12, "den": 1, "genera": [2, 3, 4, 5, 6, 9, 11, 17, 25, 97, 121, 241, 601]},
        {"num": 8, "den": 1, "genera": [7, 49, 73]},
        {"num": 20, "den": 3, "genera": [16, 19, 361]},
        {"num": 6, "den": 1, "genera": [21, 481]},
        {"num": 24, "den": 5, "genera": [41]},
        {"num": 30, "den": 7, "genera": [29, 841, 1681]}
      ],
      "square": {"coef": 4, "excluded_k": [3, 5, 7, 11, 19, 41]},
      "default": {"coef": 4}
    },
    "M": {
      "rows": [
        {"num": 24, "den": 1, "genera": [3, 4, 5, 6, 11, 17, 97, 601]},
        {"num": 16, "den": 1, "genera": [7, 9, 73]},
        {"num": 40, "den": 3, "genera": [16, 19]},
        {"num": 12, "den": 1, "genera": [2, 25, 121, 241]},
        {"num": 48, "den": 5, "genera": [41]},
        {"num": 60, "den": 7, "genera": [29, 841, 1681]}
      ],
      "square": {"coef": 8, "excluded_k": [11]},
      "default": {"coef": 4, "interval": true}
    },
    "Mstar": {
      "rows": [
        {"num": 24, "den": 1, "genera": [2, 3, 4, 5, 6, 11, 17, 97, 601]},
        {"num": 16, "den": 1, "genera": [7, 9, 73]},
        {"num": 40, "den": 3, "genera": [16, 19]},
        {"num": 12, "den": 1, "genera": [25, 121, 241]},
        {"num": 48, "den": 5, "genera": [41]},
        {"num": 60, "den": 7, "genera": [29, 841, 1681]}
      ],
      "square": {"coef": 8, "excluded_k": [11]},
      "default": {"coef": 8}
    },
    "Eminus": {
      "rows": [
        {"num": 24, "den": 1, "genera": [3, 5, 6, 11, 17, 97, 601]},
        {"num": 16, "den": 1, "genera": [7, 73]},
        {"num": 40, "den": 3, "genera": [19]},
        {"num": 48, "den": 5, "genera": [41]},
        {"num": 60, "den": 7, "genera": [1681]}
      ],
      "square": {"coef": 8, "excluded_k": []},
      "default": {"coef": 8}
    }
  }
})json";
  return text;
}

}  // namespace msg
