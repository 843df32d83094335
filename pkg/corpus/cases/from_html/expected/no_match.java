public class Declared {
    CharSequence show(String body) {
        CharSequence rendered = Html.fromHtml(body);
        return rendered;
    }
}
