#pragma once

// Function-word sets for the measured languages (ISO 639-1 keys), used by
// the stopword-frequency language detector. All entries lowercase.

#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace noticescope::detail {

inline const std::unordered_map<std::string_view,
                                std::unordered_set<std::string_view>>&
stopword_sets() {
    using Set = std::unordered_set<std::string_view>;
    static const std::unordered_map<std::string_view, Set> sets = {
        {"en",
         {"the", "of", "and", "to", "in", "a", "is", "that", "it", "this",
          "you", "we", "for", "on", "with", "as", "are", "be", "by", "or",
          "an", "not", "your", "our", "from", "at", "will", "can", "have",
          "has", "all", "more", "if", "about", "use", "uses", "using", "may",
          "which", "their", "its", "when", "also", "do", "does", "how",
          "what", "than", "these", "other", "please", "only", "here"}},
        {"de",
         {"der", "die", "das", "und", "zu", "den", "von", "mit", "auf",
          "für", "ist", "im", "dem", "nicht", "ein", "eine", "einen",
          "einem", "einer", "als", "auch", "es", "an", "werden", "aus",
          "er", "hat", "dass", "daß", "sie", "nach", "wird", "bei", "um",
          "am", "sind", "noch", "wie", "über", "so", "zum", "zur", "haben",
          "nur", "oder", "aber", "vor", "bis", "mehr", "durch", "können",
          "wir", "diese", "dieser", "dieses", "ihre", "unsere", "wenn",
          "des", "hier"}},
        {"nl",
         {"de", "het", "een", "en", "van", "in", "is", "dat", "op", "te",
          "zijn", "voor", "met", "die", "niet", "aan", "er", "om", "ook",
          "als", "maar", "dan", "wij", "we", "u", "uw", "je", "jouw",
          "deze", "dit", "door", "over", "bij", "naar", "uit", "worden",
          "wordt", "onze", "ons", "of", "kunnen", "kunt", "kan", "meer",
          "heeft", "hebben", "alle", "geven", "gaat", "hier", "zo", "wat",
          "onder"}},
        {"fr",
         {"le", "la", "les", "de", "des", "du", "un", "une", "et", "est",
          "en", "que", "qui", "dans", "pour", "sur", "avec", "au", "aux",
          "ce", "cette", "ces", "il", "elle", "nous", "vous", "par", "pas",
          "ne", "plus", "ou", "où", "son", "sa", "ses", "votre", "vos",
          "notre", "nos", "sont", "être", "à", "afin", "si", "comme",
          "mais", "tout", "tous", "toute", "toutes", "ainsi", "leur",
          "leurs"}},
        {"es",
         {"el", "la", "los", "las", "de", "del", "un", "una", "unas",
          "unos", "y", "en", "que", "es", "se", "no", "con", "por", "para",
          "su", "sus", "al", "lo", "como", "más", "pero", "este", "esta",
          "estos", "estas", "nuestro", "nuestra", "usted", "si", "sí",
          "son", "ser", "está", "están", "o", "u", "cuando", "también",
          "puede", "pueden", "todo", "todos", "sobre", "entre", "nos",
          "le"}},
        {"it",
         {"il", "lo", "la", "i", "gli", "le", "di", "del", "della", "dei",
          "delle", "dello", "degli", "un", "una", "uno", "e", "è", "che",
          "in", "per", "con", "su", "da", "al", "alla", "ai", "agli",
          "nel", "nella", "non", "si", "sono", "questo", "questa",
          "questi", "queste", "suo", "sua", "sue", "suoi", "nostro",
          "nostra", "più", "come", "anche", "o", "se", "tutti", "tutto",
          "tra", "fra", "essere", "ha", "hanno"}},
        {"pt",
         {"o", "a", "os", "as", "de", "do", "da", "dos", "das", "um",
          "uma", "uns", "umas", "e", "é", "que", "em", "no", "na", "nos",
          "nas", "para", "por", "com", "não", "se", "ao", "aos", "à", "às",
          "seu", "sua", "seus", "suas", "nosso", "nossa", "mais", "como",
          "este", "esta", "estes", "estas", "isso", "isto", "são", "ser",
          "está", "estão", "ou", "quando", "também", "pode", "podem",
          "sobre", "entre"}},
        {"cs",
         {"a", "se", "na", "je", "v", "ve", "že", "s", "z", "do", "o",
          "k", "ke", "i", "to", "jak", "ale", "pro", "za", "po", "od",
          "při", "nebo", "aby", "jsou", "být", "byl", "byla", "bylo",
          "tento", "tato", "toto", "jeho", "její", "naše", "vaše", "si",
          "už", "jen", "také", "může", "můžete", "podle", "mezi", "před",
          "což", "když", "bez", "další", "své", "jako", "tak", "co",
          "který", "která", "které"}},
        {"el",
         {"και", "το", "τα", "η", "ο", "οι", "του", "της", "των", "τον",
          "την", "τις", "τους", "να", "με", "σε", "για", "από", "που",
          "είναι", "στο", "στα", "στη", "στην", "στον", "στις", "στους",
          "αυτό", "αυτή", "αυτά", "δεν", "θα", "ως", "ή", "αν", "μας",
          "σας", "ένα", "μια", "μία", "κατά", "μετά", "πριν", "όπως",
          "όταν", "επίσης", "μπορεί", "μπορείτε", "περισσότερα", "εδώ"}},
        {"hu",
         {"a", "az", "és", "hogy", "nem", "is", "egy", "ez", "ezt", "ezen",
          "van", "vannak", "meg", "el", "de", "ha", "mint", "már", "csak",
          "vagy", "még", "ki", "be", "fel", "le", "után", "előtt", "alatt",
          "között", "által", "való", "volt", "lesz", "lehet", "kell",
          "minden", "más", "itt", "ott", "így", "úgy", "mi", "ön", "önök",
          "azt", "arra", "erre", "ennek", "annak", "vele", "hozzá"}},
        {"pl",
         {"i", "w", "we", "z", "ze", "na", "do", "nie", "że", "się",
          "jest", "są", "to", "ta", "ten", "te", "tej", "tego", "tym",
          "o", "od", "po", "przez", "dla", "jak", "ale", "czy", "być",
          "był", "była", "było", "może", "można", "mogą", "oraz", "lub",
          "albo", "aby", "żeby", "więcej", "tylko", "także", "również",
          "przy", "bez", "nasz", "nasza", "nasze", "twój", "twoja", "pod",
          "nad", "między", "która", "który", "które", "ich", "jej",
          "jego"}},
        {"ro",
         {"și", "de", "la", "cu", "în", "pe", "un", "o", "este", "sunt",
          "care", "ce", "nu", "se", "sa", "să", "din", "pentru", "mai",
          "dar", "sau", "ca", "că", "al", "ale", "a", "ai", "lui", "ei",
          "lor", "noastre", "noastră", "nostru", "dumneavoastră", "acest",
          "această", "aceste", "acestui", "poate", "puteți", "când",
          "după", "între", "prin", "fără", "despre", "toate", "tot", "fi",
          "fost", "va", "vă", "își", "mult"}},
        {"sv",
         {"och", "att", "det", "som", "en", "ett", "är", "av", "för",
          "på", "med", "till", "den", "de", "i", "inte", "om", "har",
          "du", "vi", "din", "dina", "ditt", "vår", "våra", "vårt", "kan",
          "ska", "skall", "från", "eller", "men", "så", "sig", "också",
          "även", "när", "vad", "vilket", "mer", "mest", "alla", "allt",
          "denna", "detta", "dessa", "efter", "innan", "under", "över",
          "genom", "här", "hur"}},
    };
    return sets;
}

}  // namespace noticescope::detail
