#ifndef TESTS_SUPPORT_PRESENTATIONS_HPP
#define TESTS_SUPPORT_PRESENTATIONS_HPP

// Orbifold group presentations used across the test suite, transcribed
// independently of the atlas data file so the two copies cross-check.

namespace fixtures {

inline const char* kO28 = R"(
generators: x, y, z
relators:
x^5
y^2
z^2
(x*z)^3
(x*y)^2
(y*z^-1)^2
)";

inline const char* kO34 = R"(
generators: x, y, z
relators:
x^2
y^3
z^2
(z*y)^2
(y*x*z)^2
(y*x*z*x)^3
)";

inline const char* kO20C = R"(
generators: x, y, z
relators:
x^2
y^3
z^2
(y^-1*x)^2
(y^-1*(x*z)^3*x)^2
(y^-1*x*z^-1)^2
)";

inline const char* kO22B = R"(
generators: x, y, z
relators:
x^2
y^3
z^2
(y^-1*x)^2
(y^-1*(x*z)^5*x)^2
(y^-1*x*z^-1)^2
)";

inline const char* kO22C = R"(
generators: x, y, z
relators:
x^2
y^2
z^2
(y^-1*x)^2
(y^-1*(x*z)^3*x)^2
(y^-1*x*z^-1)^5
)";

}  // namespace fixtures

#endif
