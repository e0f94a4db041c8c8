#ifndef GELATO_TESTS_APPENDIX_FIXTURES_HPP
#define GELATO_TESTS_APPENDIX_FIXTURES_HPP

// Frozen prompt bytes for the published sublabel exchanges: one Act and one
// Person example plus the shared system message. Tests compare against
// these byte-for-byte.

namespace gelato::testing {

inline constexpr const char kActMentionText[] =
    "Defending Domestic Produce Production Act of 2023";

inline constexpr const char kActContext[] =
    "seasonal industries affected by antidumping or countervailing duty "
    "investigations , and for other purposes . Be it enacted by the Senate "
    "and House of Representatives of the United States of America in "
    "Congress assembled , SECTION 1 . SHORT TITLE . This Act may be cited "
    "as the `` Defending Domestic Produce Production Act of 2023 '' . SEC . "
    "2 . DEFINITIONS . ( a ) Core Seasonal Industry . -- Section 771 of the "
    "Tariff Act of 1930 ( 19 U.S.C. 1677 ) is amended by adding at the end "
    "the following : `` ( 37";

inline constexpr const char kActUserMessage[] =
    "[[ ## mention ## ]]\n"
    "Defending Domestic Produce Production Act of 2023\n"
    "\n"
    "[[ ## context ## ]]\n"
    "seasonal industries affected by antidumping or countervailing duty "
    "investigations , and for other purposes . Be it enacted by the Senate "
    "and House of Representatives of the United States of America in "
    "Congress assembled , SECTION 1 . SHORT TITLE . This Act may be cited "
    "as the `` Defending Domestic Produce Production Act of 2023 '' . SEC . "
    "2 . DEFINITIONS . ( a ) Core Seasonal Industry . -- Section 771 of the "
    "Tariff Act of 1930 ( 19 U.S.C. 1677 ) is amended by adding at the end "
    "the following : `` ( 37\n"
    "\n"
    "[[ ## possible_tags ## ]]\n"
    "[\"Amendment\", \"PublicAct\"]\n"
    "\n"
    "Respond with the corresponding output fields, starting with the field "
    "[[ ## reasoning ## ]], then [[ ## tag ## ]], and then ending with the "
    "marker for [[ ## completed ## ]].";

inline constexpr const char kPersonMentionText[] = "Secretary";

inline constexpr const char kPersonContext[] =
    "this subsection shall have 3 years to spend funds awarded by the grant "
    "and return any unused grant funds to the Secretary . `` ( 3 ) "
    "Application . -- A foster care stabilization agency that desires to "
    "receive a grant under this subsection shall submit to the Secretary an "
    "application at such time , in such manner , and containing such "
    "information as the Secretary may require , that shall include the "
    "following : `` ( A ) A description of how grant funds will be used to "
    "provide emergency relief to foster youth by the foster";

inline constexpr const char kPersonUserMessage[] =
    "[[ ## mention ## ]]\n"
    "Secretary\n"
    "\n"
    "[[ ## context ## ]]\n"
    "this subsection shall have 3 years to spend funds awarded by the grant "
    "and return any unused grant funds to the Secretary . `` ( 3 ) "
    "Application . -- A foster care stabilization agency that desires to "
    "receive a grant under this subsection shall submit to the Secretary an "
    "application at such time , in such manner , and containing such "
    "information as the Secretary may require , that shall include the "
    "following : `` ( A ) A description of how grant funds will be used to "
    "provide emergency relief to foster youth by the foster\n"
    "\n"
    "[[ ## possible_tags ## ]]\n"
    "[\"Member\", \"Name\", \"Title\"]\n"
    "\n"
    "Respond with the corresponding output fields, starting with the field "
    "[[ ## reasoning ## ]], then [[ ## tag ## ]], and then ending with the "
    "marker for [[ ## completed ## ]].";

inline constexpr const char kSystemMessage[] =
    "Your input fields are:\n"
    "1. `mention` (str): the mention to extract the type from\n"
    "2. `context` (str): the context surrounding the mention\n"
    "3. `possible_tags` (list[str]): list of possible level-2 tags\n"
    "\n"
    "Your output fields are:\n"
    "1. `reasoning` (str)\n"
    "2. `tag` (str): the type of mention. MUST BE ONE OF THE POSSIBLE TAGS "
    "PROVIDED.\n"
    "\n"
    "All interactions will be structured in the following way, with the "
    "appropriate values filled in.\n"
    "\n"
    "[[ ## mention ## ]]\n"
    "{mention}\n"
    "\n"
    "[[ ## context ## ]]\n"
    "{context}\n"
    "\n"
    "[[ ## possible_tags ## ]]\n"
    "{possible_tags}\n"
    "\n"
    "[[ ## reasoning ## ]]\n"
    "{reasoning}\n"
    "\n"
    "[[ ## tag ## ]]\n"
    "{tag}\n"
    "\n"
    "[[ ## completed ## ]]\n"
    "\n"
    "In adhering to this structure, your objective is:\n"
    "Extract contiguous tokens referring to members of congress, titles, or "
    "simple names, if any, from a list of string tokens. Output a list of "
    "tokens.";

// The un-tokenized source snippets the published contexts come from.
inline constexpr const char kRawCardin[] = "Mr. Cardin";
inline constexpr const char kTokenizedCardin[] = "Mr . Cardin";
inline constexpr const char kRawParenthetical[] = "(19 U.S.C. 1677)";
inline constexpr const char kTokenizedParenthetical[] = "( 19 U.S.C. 1677 )";
inline constexpr const char kRawSectionHeading[] = "SECTION 1. SHORT TITLE.";
inline constexpr const char kTokenizedSectionHeading[] = "SECTION 1 . SHORT TITLE .";

}  // namespace gelato::testing

#endif  // GELATO_TESTS_APPENDIX_FIXTURES_HPP
