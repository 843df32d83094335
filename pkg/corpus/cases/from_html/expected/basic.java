public class Renderer {
    CharSequence show(String body) {
        CharSequence rendered;
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.N) {
            rendered = Html.fromHtml(body, 0);
        } else {
            rendered = Html.fromHtml(body);
        }
        return rendered;
    }
}
