#pragma once

// The connectives shipped with the tool: the six standard ones and the three
// defective ones (tonk, conk, honk).

#include <string>
#include <string_view>
#include <vector>

#include "bilateral/dsl.hpp"
#include "bilateral/error.hpp"
#include "bilateral/syntax.hpp"

namespace bilateral {

inline constexpr std::string_view kBuiltinSource = R"DSL(
; Conjunction: assertive rules of type 1, rejective rules of type 2.
(connective "and" (arity 2) (args A B)
  (rule "+andI" (polarity +) (role intro) (premises (+ A) (+ B)) (conclusion (+ (and A B))))
  (rule "+andE1" (polarity +) (role elim) (major (+ (and A B))) (premises) (conclusion (+ A)))
  (rule "+andE2" (polarity +) (role elim) (major (+ (and A B))) (premises) (conclusion (+ B)))
  (rule "-andI1" (polarity -) (role intro) (premises (- A)) (conclusion (- (and A B))))
  (rule "-andI2" (polarity -) (role intro) (premises (- B)) (conclusion (- (and A B))))
  (rule "-andE" (polarity -) (role elim) (major (- (and A B)))
        (premises (side (discharge (- A)) _ANY) (side (discharge (- B)) _ANY))
        (conclusion _ANY)))

; Disjunction: the mirror image.
(connective "or" (arity 2) (args A B)
  (rule "+orI1" (polarity +) (role intro) (premises (+ A)) (conclusion (+ (or A B))))
  (rule "+orI2" (polarity +) (role intro) (premises (+ B)) (conclusion (+ (or A B))))
  (rule "+orE" (polarity +) (role elim) (major (+ (or A B)))
        (premises (side (discharge (+ A)) _ANY) (side (discharge (+ B)) _ANY))
        (conclusion _ANY))
  (rule "-orI" (polarity -) (role intro) (premises (- A) (- B)) (conclusion (- (or A B))))
  (rule "-orE1" (polarity -) (role elim) (major (- (or A B))) (premises) (conclusion (- A)))
  (rule "-orE2" (polarity -) (role elim) (major (- (or A B))) (premises) (conclusion (- B))))

(connective "imp" (arity 2) (args A B)
  (rule "+impI" (polarity +) (role intro)
        (premises (side (discharge (+ A)) (+ B))) (conclusion (+ (imp A B))))
  (rule "+impE" (polarity +) (role elim) (major (+ (imp A B))) (premises (+ A)) (conclusion (+ B)))
  ; shape alone also fits type 1
  (rule "-impI" (polarity -) (role intro) (type 2) (premises (+ A) (- B)) (conclusion (- (imp A B))))
  (rule "-impE" (polarity -) (role elim) (major (- (imp A B)))
        (premises (side (discharge (+ A) (- B)) _ANY)) (conclusion _ANY)))

(connective "neg" (arity 1) (args A)
  (rule "+negI" (polarity +) (role intro) (type 1) (premises (- A)) (conclusion (+ (neg A))))
  (rule "+negE" (polarity +) (role elim) (major (+ (neg A))) (premises) (conclusion (- A)))
  (rule "-negI" (polarity -) (role intro) (type 2) (premises (+ A)) (conclusion (- (neg A))))
  (rule "-negE" (polarity -) (role elim) (major (- (neg A)))
        (premises (side (discharge (+ A)) _ANY)) (conclusion _ANY)))

; Falsum: no assertive introduction, hence no rejective elimination.
(connective "bot" (arity 0) (args)
  (rule "-botI" (polarity -) (role intro) (premises) (conclusion (- bot)))
  (rule "+botE" (polarity +) (role elim) (major (+ bot)) (premises) (conclusion _ANY)))

; Verum: no assertive elimination, hence no rejective introduction.
(connective "top" (arity 0) (args)
  (rule "+topI" (polarity +) (role intro) (premises) (conclusion (+ top)))
  (rule "-topE" (polarity -) (role elim) (major (- top)) (premises) (conclusion _ANY)))

(connective "tonk" (arity 2) (args A B)
  (rule "+tonkI" (polarity +) (role intro) (premises (+ A)) (conclusion (+ (tonk A B))))
  (rule "+tonkE" (polarity +) (role elim) (major (+ (tonk A B))) (premises) (conclusion (+ B))))

(connective "conk" (arity 2) (args A B)
  (rule "+conkI" (polarity +) (role intro) (premises (+ A) (+ B)) (conclusion (+ (conk A B))))
  (rule "+conkE1" (polarity +) (role elim) (major (+ (conk A B))) (premises) (conclusion (+ A)))
  (rule "+conkE2" (polarity +) (role elim) (major (+ (conk A B))) (premises) (conclusion (+ B)))
  (rule "-conkI" (polarity -) (role intro) (premises (- A) (- B)) (conclusion (- (conk A B))))
  (rule "-conkE1" (polarity -) (role elim) (major (- (conk A B))) (premises) (conclusion (- A)))
  (rule "-conkE2" (polarity -) (role elim) (major (- (conk A B))) (premises) (conclusion (- B))))

(connective "honk" (arity 2) (args A B)
  (rule "+honkI" (polarity +) (role intro) (premises (- A) (+ B)) (conclusion (+ (honk A B))))
  (rule "+honkE1" (polarity +) (role elim) (major (+ (honk A B))) (premises) (conclusion (- A)))
  (rule "+honkE2" (polarity +) (role elim) (major (+ (honk A B))) (premises) (conclusion (+ B)))
  (rule "-honkI" (polarity -) (role intro) (premises (+ A) (- B)) (conclusion (- (honk A B))))
  (rule "-honkE1" (polarity -) (role elim) (major (- (honk A B))) (premises) (conclusion (+ A)))
  (rule "-honkE2" (polarity -) (role elim) (major (- (honk A B))) (premises) (conclusion (- B))))
)DSL";

inline const std::vector<std::string>& standard_connectives() {
  static const std::vector<std::string> names = {"and", "or", "imp", "neg", "bot", "top"};
  return names;
}

inline const std::vector<ConnectiveSpec>& builtin_specs() {
  static const std::vector<ConnectiveSpec> specs = parse_spec(kBuiltinSource);
  return specs;
}

inline const ConnectiveSpec* find_builtin(std::string_view name) {
  std::string n = normalize_connective(name);
  for (const auto& s : builtin_specs())
    if (s.name == n) return &s;
  return nullptr;
}

inline const ConnectiveSpec& builtin(std::string_view name) {
  if (const auto* s = find_builtin(name)) return *s;
  throw Error(ErrorKind::UnknownName, "no built-in connective named \"" + std::string(name) + "\"");
}

}  // namespace bilateral
