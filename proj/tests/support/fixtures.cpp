#include "fixtures.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace fixtures {

std::string data_path(const std::string& name) { return std::string(EMPATHY_TEST_DATA) + "/" + name; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("empathy-test-" + std::to_string(getpid()) + "-" + std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

empathy::AnnotatedCorpus numbered_corpus(std::size_t n) {
  empathy::AnnotatedCorpus corpus;
  for (std::size_t i = 0; i < n; ++i) {
    char id[16];
    std::snprintf(id, sizeof id, "doc-%04zu", i);
    empathy::AnnotatedDocument d;
    d.id = id;
    d.text = "Die Idee ist gut.";
    d.annotations.push_back({"A", 0, 17, empathy::ComponentLabel::strength, empathy::EmpathyScore(3),
                             empathy::EmpathyScore(3)});
    corpus.documents.push_back(std::move(d));
  }
  return corpus;
}

std::string long_review() {
  return "Stärken: Ich finde deine Idee wirklich spannend, weil sie ein echtes Problem von "
         "Studierenden löst. Zum Beispiel könnten Lernende ihre Notizen automatisch teilen, und "
         "das spart viel Zeit. Besonders gut gefällt mir, dass du an die Kosten gedacht hast. "
         "Das Geschäftsmodell ist klar beschrieben und die Zielgruppe ist gut gewählt. "
         "Schwächen: Leider fehlt eine genaue Beschreibung der Konkurrenz, deshalb ist schwer zu "
         "beurteilen, wie neu die Idee wirklich ist. Außerdem bleibt unklar, wie du die ersten "
         "Kunden gewinnen möchtest. Die Finanzplanung wirkt eher knapp, denn es fehlen Zahlen zu "
         "den laufenden Kosten. Wie willst du die Server bezahlen? Auch der Datenschutz wird nur "
         "kurz erwähnt, obwohl er für Studierende wichtig ist. "
         "Verbesserungsvorschläge: Du könntest eine kleine Umfrage machen, um die Nachfrage zu "
         "prüfen. Vielleicht wäre es sinnvoll, zuerst mit einer Hochschule zu starten, weil du dort "
         "schnell Rückmeldungen bekommst. Ergänze zum Beispiel eine Tabelle mit den Kosten der "
         "ersten zwei Jahre. Ich bin begeistert von deinem Ansatz und freue mich auf die nächste "
         "Version! Beschreibe bitte auch, wie die App gegen Missbrauch geschützt wird, denn das "
         "ist für viele Nutzer entscheidend. Eine Skizze der Benutzeroberfläche würde die Idee "
         "noch greifbarer machen. Insgesamt ist das eine sehr überzeugende Arbeit, die mit "
         "wenigen Ergänzungen noch stärker wird, und ich würde die App sofort ausprobieren. "
         "Denk auch an eine Version für Lehrende, da sie oft Materialien teilen. Eine Liste mit "
         "Partnern wäre ebenfalls hilfreich, zum Beispiel Bibliotheken oder Fachschaften, weil "
         "diese viele Studierende erreichen. Bitte prüfe außerdem, ob eine Webversion reicht, "
         "denn nicht alle möchten eine weitere App installieren.";
}

}  // namespace fixtures
