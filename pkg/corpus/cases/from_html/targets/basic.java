public class Renderer {
    CharSequence show(String body) {
        CharSequence rendered;
        rendered = Html.fromHtml(body);
        return rendered;
    }
}
